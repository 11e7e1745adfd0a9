#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/af.hpp"
#include "afkit/semantics.hpp"

namespace afkit {

enum class KernelId { k_stb, k_adm, k_grd, k_com, ks_adm, ks_grd, ks_com, ks_stg, k_nav, identity };

inline constexpr KernelId kAllKernels[] = {KernelId::k_stb,  KernelId::k_adm,  KernelId::k_grd, KernelId::k_com,
                                           KernelId::ks_adm, KernelId::ks_grd, KernelId::ks_com, KernelId::ks_stg,
                                           KernelId::k_nav,  KernelId::identity};

enum class Notion { ordinary, E, N, S, W, L, ND, D, LD, U };

inline constexpr Notion kAllNotions[] = {Notion::ordinary, Notion::E,  Notion::N, Notion::S,  Notion::W,
                                         Notion::L,        Notion::ND, Notion::D, Notion::LD, Notion::U};

enum class Flavor { extension, labelling };

std::string to_string(KernelId k);
std::string to_string(Notion n);
std::string to_string(Flavor f);
KernelId parse_kernel(std::string_view tag);
Notion parse_notion(std::string_view tag);

AF kernel(const AF& f, KernelId k);

// The kernel characterizing the cell, or nullopt when the cell is not
// characterized by kernel equality alone.
std::optional<KernelId> characterizing_kernel(Notion notion, Semantics sigma, Flavor flavor = Flavor::extension);

enum class Answer { equivalent, not_equivalent, unsupported };
enum class Method { kernel, identity, criterion, none };

std::string to_string(Answer a);
std::string to_string(Method m);

struct Verdict {
    Answer answer = Answer::unsupported;
    Method method = Method::none;
    std::optional<KernelId> kernel;
    std::string detail;
};

Verdict decide_equivalence(const AF& f, const AF& g, Notion notion, Semantics sigma,
                           Flavor flavor = Flavor::extension);

struct Budget {
    int fresh_args = 1;
    // Bound on added attacks for expansions and on |B|+|S| for deletions.
    int max_attacks = 4;
    // Candidate scenarios evaluated before giving up.
    int64_t max_candidates = 2'000'000;
};

enum class SearchStatus { found, none_within_budget, budget_exhausted };
std::string to_string(SearchStatus s);

struct Witness {
    SearchStatus status = SearchStatus::none_within_budget;
    // Set for expansion notions.
    std::optional<AF> expansion;
    // Set for deletion notions: the pair [B,S].
    std::vector<std::string> removed_args;
    std::vector<Attack> removed_attacks;
    // The two differing semantic outcomes, by argument name.
    std::vector<std::vector<std::string>> f_result;
    std::vector<std::vector<std::string>> g_result;
    int64_t candidates = 0;
};

bool searchable(Notion notion);
// Throws InvalidArgument for notions outside {E,N,S,W,L,ND,D,LD}.
Witness search_counterexample(const AF& f, const AF& g, Notion notion, Semantics sigma, const Budget& budget,
                              Flavor flavor = Flavor::extension);

// Extensions keyed by argument name, for comparing outputs of different frameworks.
std::vector<std::vector<std::string>> named(const AF& f, const ExtensionList& list);

}  // namespace afkit
