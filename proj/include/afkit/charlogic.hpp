#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afkit/af.hpp"
#include "afkit/kernels.hpp"
#include "afkit/semantics.hpp"

namespace afkit {

inline constexpr int kMaxAtoms = 12;

// A theory is a bitmask over the language's atoms.
using Theory = uint32_t;

// Set of interpretation indices.
class IdSet {
public:
    IdSet() = default;
    explicit IdSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
    static IdSet full(int n);

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool subset_of(const IdSet& o) const;
    IdSet operator&(const IdSet& o) const;
    IdSet operator|(const IdSet& o) const;
    bool operator==(const IdSet& o) const = default;
    bool operator<(const IdSet& o) const { return w_ < o.w_; }
    std::vector<int> members() const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

class FiniteLogic {
public:
    FiniteLogic() = default;
    // models must have exactly 2^|atoms| entries, indexed by theory mask.
    FiniteLogic(std::vector<std::string> atoms, std::vector<std::string> interpretations, std::vector<IdSet> models);

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    Theory theory_count() const { return Theory{1} << atoms_.size(); }
    Theory all_atoms() const { return theory_count() - 1; }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::vector<std::string>& interpretations() const { return interps_; }
    const IdSet& models(Theory t) const { return models_[t]; }

    std::string theory_name(Theory t) const;  // "{a,b}"
    // Parses "a,b" or "{a,b}" or "{}"; throws InvalidArgument.
    Theory parse_theory(const std::string& text) const;

private:
    std::vector<std::string> atoms_;
    std::vector<std::string> interps_;
    std::vector<IdSet> models_;
};

struct EquivalenceBlock {
    std::vector<Theory> members;  // ascending by size, then mask
    Theory representative = 0;
    Theory cover = 0;
};

struct EquivalencePartition {
    std::vector<EquivalenceBlock> blocks;  // ordered by representative
    std::vector<int> block_of;             // theory -> block index
};

EquivalencePartition strong_eq_classes(const FiniteLogic& logic);
bool strongly_equivalent(const FiniteLogic& logic, Theory a, Theory b);

// Interpretations of the result are the theories of the source language.
FiniteLogic canonical_characterization(const FiniteLogic& logic);

bool has_intersection_property(const FiniteLogic& logic);
bool has_binary_intersection(const FiniteLogic& logic);
bool is_antimonotone(const FiniteLogic& logic);
bool is_characterization(const FiniteLogic& candidate, const FiniteLogic& target);

Theory canonical_consequence(const FiniteLogic& logic, Theory t);
struct ConsequenceProperties {
    bool increasing = false;
    bool monotone = false;
    bool idempotent = false;
};
ConsequenceProperties consequence_properties(const FiniteLogic& logic);

// Canonical theory function th(K): union of all theories whose models include K.
Theory canonical_theory(const FiniteLogic& logic, const IdSet& k);
bool galois_check(const FiniteLogic& logic);

// Random model table over `atoms` atoms and `interps` interpretations.
FiniteLogic random_logic(int atoms, int interps, uint64_t seed);

inline constexpr int kMaxRhoUniverse = 3;

// The AF logic over a small universe: theories are frameworks whose arguments
// lie in the universe, strong equivalence is kernel equality.
struct RhoLogic {
    std::vector<std::string> universe;
    Semantics sigma = Semantics::stb;
    KernelId kernel = KernelId::identity;
    // Ordered by argument count, attack count, then attack list.
    std::vector<AF> frameworks;
    // rho_prime[i] = indices j with frameworks[j] strongly equivalent to some
    // superframework of frameworks[i].
    std::vector<std::vector<int>> rho_prime;

    int index_of(const AF& f) const;  // -1 when outside the universe
};

// Throws InvalidArgument for universes above kMaxRhoUniverse and Unsupported
// when sigma has no expansion-equivalence kernel.
RhoLogic rho_logic(const std::vector<std::string>& universe, Semantics sigma);
// rho'(F) = rho'(G) iff F and G are strongly equivalent.
bool rho_characterization_holds(const RhoLogic& r);
// rho'(F ⊔ G) = rho'(F) ∩ rho'(G) for all pairs.
bool rho_intersection_holds(const RhoLogic& r);

}  // namespace afkit
