#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "extremal/lemmas.hpp"

namespace extremal {

enum class LemmaId { kDiracKopylov, kBinom, kNearPerfect, kStar, kContraction, kStability };

inline constexpr LemmaId kAllLemmas[] = {LemmaId::kDiracKopylov, LemmaId::kBinom,
                                         LemmaId::kNearPerfect,  LemmaId::kStar,
                                         LemmaId::kContraction,  LemmaId::kStability};

/// "dirac-kopylov", "binom", "near-perfect", "star", "contraction", "stability".
std::string lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view text);

struct TrialConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  /// Fixed cycle bound and matching bound for the free-graph lemmas. When
  /// unset, trial i uses k = 5 + i mod 3 and s = 2 + (i / 3) mod 3.
  std::optional<int> k;
  std::optional<int> s;
  int max_order = 12;
  /// The binomial check enumerates [0, binom_max]^5 and ignores `trials`.
  int binom_max = 30;
};

struct TrialSummary {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

/// Runs one lemma check per trial on instance_seed(seed, i) and reports
/// every record to `sink`. The binomial check reports failures only.
TrialSummary run_lemma_trials(LemmaId id, const TrialConfig& config,
                              const std::function<void(const LemmaRecord&)>& sink);

}  // namespace extremal
