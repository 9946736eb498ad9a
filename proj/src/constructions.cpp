#include "extremal/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace extremal {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

Decomposition divide(std::int64_t value, std::int64_t divisor) {
  return {value / divisor, value % divisor};
}

// Residual independent-set size of the family at params.n; nullopt when the
// family's branch conditions fail (reason written to `why`).
std::optional<std::int64_t> residual(Family f, const FamilyParams& fp, std::string& why) {
  const std::int64_t n = fp.n, p = fp.p, s = fp.s;
  auto need = [&](bool ok, std::string reason) {
    if (!ok) why = std::move(reason);
    return ok;
  };
  switch (f) {
    case Family::kG1:
    case Family::kG2: {
      if (!need(fp.parity == Parity::kOdd, family_name(f) + " needs odd k (k = 2p-1)")) return {};
      if (!need(s >= p, family_name(f) + " needs s >= p")) return {};
      const auto [a, b] = *fp.ab;
      if (f == Family::kG1) return n - p + 1 - a * (2 * p - 3);
      if (!need(b >= p / 2 && b <= p - 3, "G2 needs ceil((p-1)/2) <= b <= p-3"))
        return {};
      return n - p - a * (2 * p - 3) - 2 * b;
    }
    case Family::kG3:
    case Family::kG4:
    case Family::kG5:
    case Family::kG6: {
      if (!need(fp.parity == Parity::kEven, family_name(f) + " needs even k (k = 2p)")) return {};
      if (!need(s >= p, family_name(f) + " needs s >= p")) return {};
      const auto [q, t] = *fp.qt;
      const auto [c, d] = *fp.cd;
      if (f == Family::kG3)
        return t == 0 ? n - p + 1 - q * (2 * p - 3) : n - p - q * (2 * p - 3) - 2 * t;
      if (f == Family::kG4)
        return d == 0 ? n - p + 1 - c * (2 * p - 2) : n - p - c * (2 * p - 2) - 2 * d;
      if (f == Family::kG5) {
        if (!need(d >= 1 && d <= p - 3, "G5 needs 1 <= d <= p-3")) return {};
        if (!need(c >= p - d - 2, "G5 needs c >= p-d-2")) return {};
        const std::int64_t even_blocks = c - p + d + 2, odd_blocks = p - d - 1;
        return n - p + 1 - even_blocks * (2 * p - 2) - odd_blocks * (2 * p - 3);
      }
      if (!need(d >= 1 && d <= p - 2, "G6 needs 1 <= d <= p-2")) return {};
      return n - p - 1 - c * (2 * p - 2);
    }
    case Family::kStar:
      if (!need(p > s, "STAR needs p > s")) return {};
      return n - s;
  }
  return {};
}

// K_1 v ((K_{p-2} v I_m) u extra...)
Term apex_layout(std::int64_t p, std::int64_t m, std::vector<Term> extra) {
  std::vector<Term> parts;
  parts.push_back(join_term(clique_term(p - 2), independent_term(m)));
  for (Term& t : extra) parts.push_back(std::move(t));
  return join_term(clique_term(1), union_term(std::move(parts)));
}

Graph realize_checked(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kClique:
      return clique(static_cast<int>(t.size));
    case Term::Kind::kIndependent:
      return independent(static_cast<int>(t.size));
    case Term::Kind::kUnion: {
      Graph out;
      for (const Term& part : t.parts) out = disjoint_union(out, realize_checked(part));
      return out;
    }
    case Term::Kind::kJoin:
      return join(realize_checked(t.parts[0]), realize_checked(t.parts[1]));
    case Term::Kind::kReplicate:
      return replicate(static_cast<int>(t.size), realize_checked(t.parts[0]));
  }
  return {};
}

}  // namespace

FamilyParams derive_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  if (k < 5) throw ParameterError("k = " + str(k) + " unsupported: need k >= 5 so that p >= 3");
  if (s < 1) throw ParameterError("s = " + str(s) + " unsupported: need s >= 1");
  if (n < 1) throw ParameterError("n = " + str(n) + " unsupported: need n >= 1");
  if (r < 0) throw ParameterError("r = " + str(r) + " unsupported: need r >= 0");
  FamilyParams fp;
  fp.n = n;
  fp.k = k;
  fp.s = s;
  fp.r = r;
  fp.p = (k - 1) / 2 + 1;
  fp.parity = (k % 2 == 1) ? Parity::kOdd : Parity::kEven;
  if (s >= fp.p) {
    const std::int64_t excess = s - fp.p + 1;
    if (fp.parity == Parity::kOdd) {
      fp.ab = divide(excess, fp.p - 2);
    } else {
      fp.cd = divide(excess, fp.p - 1);
      fp.qt = divide(excess, fp.p - 2);
    }
  }
  return fp;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kG1: return "G1";
    case Family::kG2: return "G2";
    case Family::kG3: return "G3";
    case Family::kG4: return "G4";
    case Family::kG5: return "G5";
    case Family::kG6: return "G6";
    case Family::kStar: return "STAR";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Family f : kAllFamilies)
    if (family_name(f) == upper) return f;
  return std::nullopt;
}

Term clique_term(std::int64_t t) { return {Term::Kind::kClique, t, {}}; }
Term independent_term(std::int64_t t) { return {Term::Kind::kIndependent, t, {}}; }
Term union_term(std::vector<Term> parts) { return {Term::Kind::kUnion, 0, std::move(parts)}; }
Term join_term(Term left, Term right) {
  std::vector<Term> parts;
  parts.push_back(std::move(left));
  parts.push_back(std::move(right));
  return {Term::Kind::kJoin, 0, std::move(parts)};
}
Term replicate_term(std::int64_t copies, Term h) {
  std::vector<Term> parts;
  parts.push_back(std::move(h));
  return {Term::Kind::kReplicate, copies, std::move(parts)};
}

std::int64_t Term::order() const {
  switch (kind) {
    case Kind::kClique:
    case Kind::kIndependent:
      return size;
    case Kind::kUnion:
    case Kind::kJoin: {
      std::int64_t total = 0;
      for (const Term& t : parts) total += t.order();
      return total;
    }
    case Kind::kReplicate:
      return size * parts[0].order();
  }
  return 0;
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::kClique: return "K" + str(size);
    case Kind::kIndependent: return "I" + str(size);
    case Kind::kReplicate: return str(size) + parts[0].to_string();
    case Kind::kJoin: return "(" + parts[0].to_string() + " v " + parts[1].to_string() + ")";
    case Kind::kUnion: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " u " : "") + parts[i].to_string();
      return out + ")";
    }
  }
  return {};
}

Graph realize(const Term& term) {
  if (term.order() > kMaxVertices)
    throw CapacityError("construction of order " + str(term.order()) + " exceeds capacity " +
                        str(kMaxVertices));
  return realize_checked(term);
}

std::vector<Count> clique_profile(const Term& term, int max_r) {
  if (max_r < 0) throw PreconditionError("clique_profile: negative clique size");
  std::vector<Count> out(static_cast<std::size_t>(max_r) + 1, 0);
  out[0] = 1;
  switch (term.kind) {
    case Term::Kind::kClique:
      for (int i = 1; i <= max_r; ++i) out[i] = binomial(static_cast<Count>(term.size), i);
      break;
    case Term::Kind::kIndependent:
      if (max_r >= 1) out[1] = static_cast<Count>(term.size);
      break;
    case Term::Kind::kUnion:
      for (const Term& part : term.parts) {
        auto sub = clique_profile(part, max_r);
        for (int i = 1; i <= max_r; ++i) out[i] = checked_add(out[i], sub[i]);
      }
      break;
    case Term::Kind::kJoin: {
      auto left = clique_profile(term.parts[0], max_r);
      auto right = clique_profile(term.parts[1], max_r);
      for (int i = 0; i <= max_r; ++i) {
        Count total = 0;
        for (int j = 0; j <= i; ++j) total = checked_add(total, checked_mul(left[j], right[i - j]));
        out[i] = total;
      }
      break;
    }
    case Term::Kind::kReplicate: {
      auto sub = clique_profile(term.parts[0], max_r);
      for (int i = 1; i <= max_r; ++i) out[i] = checked_mul(static_cast<Count>(term.size), sub[i]);
      break;
    }
  }
  return out;
}

std::optional<std::string> inapplicable_reason(Family family, const FamilyParams& params) {
  std::string why;
  auto m = residual(family, params, why);
  if (!m) return why;
  if (*m < 0)
    return family_name(family) + " needs n >= " + str(params.n - *m) + " (residual independent set " +
           str(*m) + " < 0)";
  return std::nullopt;
}

std::optional<std::int64_t> minimum_order(Family family, const FamilyParams& params) {
  std::string why;
  auto m = residual(family, params, why);
  if (!m) return std::nullopt;
  return std::max<std::int64_t>(params.n - *m, 1);
}

Term construction_term(Family family, const FamilyParams& params) {
  if (auto why = inapplicable_reason(family, params)) throw ParameterError(*why);
  std::string unused;
  const std::int64_t m = *residual(family, params, unused);
  const std::int64_t p = params.p;
  switch (family) {
    case Family::kG1:
      return apex_layout(p, m, {replicate_term(params.ab->quotient, clique_term(2 * p - 3))});
    case Family::kG2:
      return apex_layout(p, m,
                         {replicate_term(params.ab->quotient, clique_term(2 * p - 3)),
                          clique_term(2 * params.ab->remainder + 1)});
    case Family::kG3: {
      const auto [q, t] = *params.qt;
      std::vector<Term> extra;
      extra.push_back(replicate_term(q, clique_term(2 * p - 3)));
      if (t != 0) extra.push_back(clique_term(2 * t + 1));
      return apex_layout(p, m, std::move(extra));
    }
    case Family::kG4: {
      const auto [c, d] = *params.cd;
      std::vector<Term> extra;
      extra.push_back(replicate_term(c, clique_term(2 * p - 2)));
      if (d != 0) extra.push_back(clique_term(2 * d + 1));
      return apex_layout(p, m, std::move(extra));
    }
    case Family::kG5: {
      const auto [c, d] = *params.cd;
      return apex_layout(p, m,
                         {replicate_term(c - p + d + 2, clique_term(2 * p - 2)),
                          replicate_term(p - d - 1, clique_term(2 * p - 3))});
    }
    case Family::kG6: {
      // K_1 v ((K_{p-2} v (K_2 u I_m)) u c K_{2p-2})
      const auto c = params.cd->quotient;
      Term inner = join_term(clique_term(p - 2), union_term({clique_term(2), independent_term(m)}));
      return join_term(clique_term(1),
                       union_term({std::move(inner), replicate_term(c, clique_term(2 * p - 2))}));
    }
    case Family::kStar:
      return join_term(clique_term(params.s), independent_term(m));
  }
  throw ParameterError("unknown family");
}

Graph build_construction(Family family, const FamilyParams& params) {
  return realize(construction_term(family, params));
}

Count formula_clique_count(Family family, const FamilyParams& params) {
  if (params.r < 0) throw PreconditionError("negative clique size");
  return clique_profile(construction_term(family, params), static_cast<int>(params.r)).back();
}

std::string construction_id(Family family, const FamilyParams& params) {
  std::ostringstream os;
  os << family_name(family) << "[n=" << params.n << ",k=" << params.k << ",s=" << params.s << "]";
  return os.str();
}

TheoremReport theorem_value(const FamilyParams& params) {
  TheoremReport report;
  std::vector<Family> named;
  if (params.star_branch()) {
    report.branch = "p>s";
    named = {Family::kStar};
  } else if (params.parity == Parity::kOdd) {
    const std::int64_t b = params.ab->remainder;
    if (b < params.p / 2) {  // ceil((p-1)/2) == floor(p/2)
      report.branch = "odd:b<ceil((p-1)/2)";
      named = {Family::kG1};
    } else {
      report.branch = "odd:b>=ceil((p-1)/2)";
      named = {Family::kG1, Family::kG2};
    }
  } else {
    const std::int64_t d = params.cd->remainder;
    if (d == 0) {
      report.branch = "even:d=0";
      named = {Family::kG3, Family::kG4};
    } else if (d == params.p - 2) {
      report.branch = "even:d=p-2";
      named = {Family::kG3, Family::kG4, Family::kG6};
    } else {
      report.branch = "even:1<=d<=p-3";
      named = {Family::kG3, Family::kG4, Family::kG5, Family::kG6};
    }
  }
  for (Family f : named) {
    FamilyEvaluation eval{f, false, std::nullopt, {}};
    if (auto why = inapplicable_reason(f, params)) {
      eval.note = *why;
      report.below_threshold = true;
    } else {
      eval.applicable = true;
      eval.value = formula_clique_count(f, params);
      if (!report.value || *eval.value > *report.value) report.value = eval.value;
    }
    report.families.push_back(std::move(eval));
  }
  return report;
}

Count matching_turan_value(std::int64_t n, std::int64_t s, std::int64_t r) {
  if (s < 0) throw ParameterError("s = " + str(s) + " out of range: need s >= 0");
  if (r < 2) throw ParameterError("r = " + str(r) + " out of range: need r >= 2");
  if (n < 2 * s + 1)
    throw ParameterError("n = " + str(n) + " out of range: need n >= 2s+1 = " + str(2 * s + 1));
  const Count clique_side = binomial(static_cast<Count>(2 * s + 1), static_cast<Count>(r));
  const Count star_side =
      checked_add(binomial(static_cast<Count>(s), static_cast<Count>(r)),
                  checked_mul(static_cast<Count>(n - s),
                              binomial(static_cast<Count>(s), static_cast<Count>(r - 1))));
  return std::max(clique_side, star_side);
}

}  // namespace extremal
