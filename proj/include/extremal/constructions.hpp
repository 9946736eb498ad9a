#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extremal/checked.hpp"
#include "extremal/graph.hpp"

namespace extremal {

enum class Parity { kOdd, kEven };

/// value = quotient * divisor + remainder with 0 <= remainder < divisor.
struct Decomposition {
  std::int64_t quotient = 0;
  std::int64_t remainder = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// (n, k, s, r) plus p = floor((k-1)/2) + 1 and the quotient/remainder splits
/// of s-p+1 used by the constructions. The splits are present only when s >= p.
struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t r = 0;
  std::int64_t p = 0;
  Parity parity = Parity::kOdd;
  std::optional<Decomposition> ab;  ///< s-p+1 = a(p-2) + b
  std::optional<Decomposition> cd;  ///< s-p+1 = c(p-1) + d
  std::optional<Decomposition> qt;  ///< s-p+1 = q(p-2) + t

  /// The p > s regime in which K_s v I_{n-s} is already long-cycle free.
  bool star_branch() const noexcept { return p > s; }
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws ParameterError for k < 5, s < 1 or n < 1.
FamilyParams derive_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);

enum class Family { kG1, kG2, kG3, kG4, kG5, kG6, kStar };

inline constexpr Family kAllFamilies[] = {Family::kG1, Family::kG2, Family::kG3, Family::kG4,
                                          Family::kG5, Family::kG6, Family::kStar};

std::string family_name(Family f);  ///< "G1".."G6", "STAR"
std::optional<Family> parse_family(std::string_view text);  ///< case-insensitive

/// Composition expression over K_t, I_t, union, join and replication. Both the
/// graph builder and the closed-form clique counter interpret it.
struct Term {
  enum class Kind { kClique, kIndependent, kUnion, kJoin, kReplicate };
  Kind kind = Kind::kIndependent;
  std::int64_t size = 0;    ///< t for K_t / I_t, copy count for kReplicate
  std::vector<Term> parts;  ///< operands (one for kReplicate, two for kJoin)

  std::int64_t order() const;
  std::string to_string() const;
};

Term clique_term(std::int64_t t);
Term independent_term(std::int64_t t);
Term union_term(std::vector<Term> parts);
Term join_term(Term left, Term right);
Term replicate_term(std::int64_t copies, Term h);

/// Builds the graph with primitive/union/join/replicate (left operands keep
/// their indices). Throws CapacityError above 64 vertices.
Graph realize(const Term& term);

/// N(K_i, term) for i = 0..max_r from binomial identities, without building
/// the graph. Throws OverflowError on 64-bit overflow.
std::vector<Count> clique_profile(const Term& term, int max_r);

/// Why `family` cannot be built for `params`, or nullopt when it can. The
/// residual independent set must be nonnegative.
std::optional<std::string> inapplicable_reason(Family family, const FamilyParams& params);

/// Smallest n at which `family` is applicable for the other fields of
/// `params`, or nullopt if it never is.
std::optional<std::int64_t> minimum_order(Family family, const FamilyParams& params);

/// The family's defining expression. Throws ParameterError naming the
/// violated constraint when the family is not applicable.
Term construction_term(Family family, const FamilyParams& params);

Graph build_construction(Family family, const FamilyParams& params);

/// N(K_r, build_construction(family, params)) in closed form.
Count formula_clique_count(Family family, const FamilyParams& params);

/// Text id such as "G1[n=10,k=5,s=3]".
std::string construction_id(Family family, const FamilyParams& params);

struct FamilyEvaluation {
  Family family;
  bool applicable = false;
  std::optional<Count> value;
  std::string note;  ///< inapplicability reason when !applicable
};

struct TheoremReport {
  std::string branch;
  std::vector<FamilyEvaluation> families;
  std::optional<Count> value;
  /// Some family named by the branch is below its construction threshold at n.
  bool below_threshold = false;
};

/// Max of formula_clique_count over the families the theorems name for the
/// parameter branch. Always a lower bound on the extremal number.
TheoremReport theorem_value(const FamilyParams& params);

/// max{C(2s+1, r), C(s, r) + (n-s) C(s, r-1)}, the matching-only value.
/// Throws ParameterError when n < 2s+1 or r < 2.
Count matching_turan_value(std::int64_t n, std::int64_t s, std::int64_t r);

}  // namespace extremal
