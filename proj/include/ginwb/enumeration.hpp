#pragma once

#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "ginwb/gen_tree.hpp"
#include "ginwb/staircase.hpp"

namespace ginwb {

/// Search-space constraints for the gin enumerations. Unset numeric filters
/// are -1.
struct ConstraintSet {
  int ambient = 4;                      // projective dimension of the curve's span
  long long target_colength = 11;      // degree of the hyperplane section
  int max_regularity = 5;              // hyperplane gins
  bool uniform_position = true;        // h(t) >= min(colength, 3t+1)
  int uniform_position_max_degree = 64;
  int max_quadratic_generators = 3;
  bool forbid_linear_generators = true;
  // curve-gin search
  int curve_max_regularity = 0;        // 0 = unconstrained
  bool key_inference = false;
  int max_deg6_rewrites = -1;
  int min_h0_cubics = -1;
  int max_h0_cubics = -1;
};

/// The published ten-entry reference table of hyperplane gins (degree 11,
/// curves spanning P^4), as Borel(...) literals in 3 variables.
inline const std::vector<std::string>& reference_classification_p4() {
  static const std::vector<std::string> table = {
      "Borel(x2^4, x1*x2^2)",
      "Borel(x2^4, x1^2*x2, x0^2)",
      "Borel(x2^5, x1*x2^2, x0^2)",
      "Borel(x2^4, x1^3, x0*x2^2, x0*x1)",
      "Borel(x2^4, x1^2*x2, x0*x2^3, x0*x1)",
      "Borel(x2^5, x1*x2^3, x1^2*x2, x0*x2^2, x0*x1)",
      "Borel(x2^5, x1*x2^2, x0*x2^3, x0*x1)",
      "Borel(x2^4, x0*x2)",
      "Borel(x2^5, x1*x2^3, x1^3, x0*x2)",
      "Borel(x2^5, x1^2*x2, x0*x2)",
  };
  return table;
}

/// Reference g+i bounds printed alongside the table (entry k of the table
/// maps to bound[k]; the last two entries are printed the other way around
/// from what the cone genera give).
inline const std::vector<int>& reference_bounds_p4() {
  static const std::vector<int> b = {8, 9, 10, 10, 10, 11, 11, 11, 13, 12};
  return b;
}

struct EnumerationRecord {
  MonomialIdeal ideal;   // 3 variables
  long long colength = 0;
  int regularity = 0;
  long long cone_genus = 0;
  long long bound = 0;   // g+i bound computed from the cone
  int matches_reference = 0;  // 1-based index into the reference table, 0 = none
  std::vector<std::string> notes;
};

/// Hilbert function of the point scheme in P^3 cut out by a hyperplane gin
/// (ideal in 3 variables): dimension of the degree-t piece of the quotient
/// of the extension to 4 variables.
inline long long point_hilbert(const MonomialIdeal& I3, int t) {
  return hilbert_function_of_section(I3, 4, t);
}

/// g+i bound attached to a hyperplane gin: with m the regularity of the cone
/// ideal, colength*m + 1 - binom(m+4,4) + (number of degree-m monomials of
/// the cone ideal in 5 variables). Equals the cone genus.
inline long long gplusi_bound(const MonomialIdeal& I3, long long len) {
  int m = I3.max_gen_degree();
  MonomialIdeal cone = cone_extend(I3, 2);
  auto P = graded_profile(cone, m);
  return len * m + 1 - binom(m + 4, 4) + P.inside[m];
}

/// Exhaustive enumeration of Borel-fixed ideals in 3 variables with the
/// requested colength and generator degrees <= max_reg, by extending the
/// standard-monomial set degree by degree. The standard set of a Borel-fixed
/// ideal is closed under the inverse moves x_i -> x_j (i < j) and under
/// divisibility, which is what the layer recursion enforces.
inline std::vector<MonomialIdeal> enumerate_borel_ideals_3v(long long len, int max_reg) {
  std::vector<MonomialIdeal> out;
  // layers[d] = standard monomials of degree d
  std::vector<std::vector<Monomial>> layers;
  layers.push_back({Monomial()});

  auto downs = [](const Monomial& m, int nvars) {
    std::vector<Monomial> v;
    for (int i = 0; i < nvars; ++i) {
      if (!m.e[i]) continue;
      for (int j = i + 1; j < nvars; ++j) v.push_back(m.div_var(i).times_var(j));
    }
    return v;
  };

  std::function<void(long long)> rec = [&](long long total) {
    int d = static_cast<int>(layers.size());
    if (total == len) {
      if (d > max_reg + 1) return;
      // materialize: standard set = union of layers; minimal generators are
      // the non-standard monomials all of whose divisors are standard
      std::unordered_set<Monomial, MonomialHash> std_set;
      for (const auto& L : layers)
        for (const auto& m : L) std_set.insert(m);
      std::vector<Monomial> gens;
      for (int dd = 1; dd <= d; ++dd) {
        for (const auto& m : monomials_of_degree(3, dd)) {
          if (std_set.count(m)) continue;
          bool all_std = true;
          for (int i = 0; i < 3 && all_std; ++i)
            if (m.e[i] && !std_set.count(m.div_var(i))) all_std = false;
          if (all_std) gens.push_back(m);
        }
      }
      out.emplace_back(3, std::move(gens));
      return;
    }
    if (total > len || d > max_reg) return;
    const auto& prev = layers.back();
    std::unordered_set<Monomial, MonomialHash> prev_set(prev.begin(), prev.end());
    // candidates: monomials of degree d all of whose divisors are standard
    std::vector<Monomial> cands;
    for (const auto& m : monomials_of_degree(3, d)) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        if (m.e[i] && !prev_set.count(m.div_var(i))) ok = false;
      if (ok) cands.push_back(m);
    }
    int nc = static_cast<int>(cands.size());
    std::unordered_map<Monomial, int, MonomialHash> idx;
    for (int i = 0; i < nc; ++i) idx[cands[i]] = i;
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
      if (mask == 0 && total < len) continue;  // empty layer ends the staircase
      bool closed = true;
      long long sz = 0;
      for (int i = 0; i < nc && closed; ++i) {
        if (!(mask >> i & 1)) continue;
        ++sz;
        for (const auto& dn : downs(cands[i], 3)) {
          auto it = idx.find(dn);
          // a down-move that is not even a candidate lies in the ideal:
          // contradiction with the complement being down-closed
          if (it == idx.end() || !(mask >> it->second & 1)) { closed = false; break; }
        }
      }
      if (!closed || total + sz > len) continue;
      std::vector<Monomial> layer;
      for (int i = 0; i < nc; ++i)
        if (mask >> i & 1) layer.push_back(cands[i]);
      layers.push_back(std::move(layer));
      rec(total + sz);
      layers.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Enumerate hyperplane gins for degree-`len` sections of nondegenerate
/// curves in P^4, under the given constraints. Every record carries the cone
/// genus, the g+i bound, and its match against the reference table.
inline std::vector<EnumerationRecord> enumerate_hyperplane_gins_p4(long long len,
                                                                   const ConstraintSet& C) {
  std::vector<EnumerationRecord> out;
  std::vector<MonomialIdeal> refs;
  for (const auto& s : reference_classification_p4()) refs.push_back(parse_ideal_literal(s, 3));

  for (auto& I : enumerate_borel_ideals_3v(len, C.max_regularity)) {
    int quad = 0, lin = 0;
    for (const auto& g : I.generators()) {
      if (g.deg() == 1) ++lin;
      if (g.deg() == 2) ++quad;
    }
    if (C.forbid_linear_generators && lin > 0) continue;
    if (C.max_quadratic_generators >= 0 && quad > C.max_quadratic_generators) continue;
    if (C.uniform_position) {
      bool ok = true;
      for (int t = 1; t <= C.uniform_position_max_degree; ++t) {
        long long lower = std::min<long long>(len, 3LL * t + 1);
        if (point_hilbert(I, t) < lower) { ok = false; break; }
        if (lower == len) break;
      }
      if (!ok) continue;
    }
    EnumerationRecord r;
    r.colength = colength(I);
    r.regularity = regularity(cone_extend(I, 1));  // saturated in 4 variables
    if (r.regularity > C.max_regularity) continue;
    if (r.colength != len) continue;
    r.cone_genus = [&] {
      auto [d, g] = one_dim_degree_genus(cone_extend(I, 2));
      (void)d;
      return g;
    }();
    r.bound = gplusi_bound(I, r.colength);
    for (size_t k = 0; k < refs.size(); ++k)
      if (refs[k] == I) r.matches_reference = static_cast<int>(k) + 1;
    if (r.bound != r.cone_genus)
      r.notes.push_back("bound/cone-genus mismatch");
    if (r.matches_reference == 0)
      r.notes.push_back("not in the reference table");
    else if (reference_bounds_p4()[r.matches_reference - 1] != r.bound)
      r.notes.push_back("reference bound " +
                        std::to_string(reference_bounds_p4()[r.matches_reference - 1]) +
                        " != computed " + std::to_string(r.bound));
    r.ideal = std::move(I);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const EnumerationRecord& a, const EnumerationRecord& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.ideal < b.ideal;
  });
  return out;
}

/// Entries of the reference table that are not realized by any enumerated
/// record (defective as printed): returns (1-based index, reason).
inline std::vector<std::pair<int, std::string>> reference_diff(
    const std::vector<EnumerationRecord>& records) {
  std::vector<std::pair<int, std::string>> diffs;
  const auto& table = reference_classification_p4();
  for (size_t k = 0; k < table.size(); ++k) {
    bool found = false;
    for (const auto& r : records)
      if (r.matches_reference == static_cast<int>(k) + 1) found = true;
    if (!found) {
      MonomialIdeal I = parse_ideal_literal(table[k], 3);
      long long len = 0;
      std::string why;
      try {
        len = colength(I);
        why = "colength " + std::to_string(len);
      } catch (const ginwb_error&) {
        why = "not zero-dimensional";
      }
      diffs.emplace_back(static_cast<int>(k) + 1,
                         "reference entry " + std::to_string(k + 1) + " (" + table[k] +
                             ") not realized: " + why);
    }
  }
  return diffs;
}

// ---------------------------------------------------------------------------
// curve gins
// ---------------------------------------------------------------------------

/// h^1 of the twist-5 ideal sheaf of the curve cut out by a Borel-fixed
/// saturated ideal in 5 variables: the number of trie nonleaves of degree 6
/// or more (every such vertex records a rewrite applied in degree >= 6).
inline long long curve_i(const MonomialIdeal& I5) {
  std::unordered_set<Monomial, MonomialHash> nl;
  long long c = 0;
  for (const auto& g : I5.generators())
    for (const auto& p : g.string_prefixes())
      if (p.deg() >= 6 && nl.insert(p).second) ++c;
  return c;
}

/// Number of degree-3 monomials of the ideal in its 5-variable ambient ring,
/// i.e. h^0 of the twist-3 ideal sheaf.
inline long long h0_cubics(const MonomialIdeal& I5) {
  long long c = 0;
  for (const auto& m : monomials_of_degree(5, 3))
    if (I5.contains(m)) ++c;
  return c;
}

/// Tree-intrinsic form of the key-inference admissibility test:
/// (1) no rewrite in degree 6 was applied to an x3-free generator, i.e. the
///     trie has no x3-free nonleaf of degree 6;
/// (2) the two-step pattern "x3-free m of degree 5 rewritten, then m*x3 of
///     degree 6 rewritten" occurs at most once.
inline bool key_inference_admissible_ideal(const MonomialIdeal& I5) {
  std::unordered_set<Monomial, MonomialHash> nl;
  for (const auto& g : I5.generators())
    for (const auto& p : g.string_prefixes()) nl.insert(p);
  int pattern = 0;
  for (const auto& m : nl) {
    if (m.e[3] == 0 && m.e[4] == 0) {
      if (m.deg() == 6) return false;
      if (m.deg() == 5 && nl.count(m.times_var(3))) ++pattern;
    }
  }
  return pattern <= 1;
}

/// History form of the same test.
inline bool key_inference_admissible(const RewriteHistory& H) {
  int pattern = 0;
  for (const auto& ev : H.events) {
    const Monomial& m = ev.target;
    bool x3free = (m.e[3] == 0);
    if (x3free && m.deg() == 6) return false;
    if (x3free && m.deg() == 5) {
      Monomial mx3 = m.times_var(3);
      for (const auto& ev2 : H.events)
        if (ev2.target == mx3) { ++pattern; break; }
    }
  }
  return pattern <= 1;
}

struct CurveGinRecord {
  MonomialIdeal ideal;  // 5 variables, generators in x0..x3
  long long g = 0;
  long long i = 0;
  int rewrites = 0;
  long long h0_cubics = 0;
  bool key_inference_ok = true;
  bool in_h0_window = true;
};

struct CurveGinSearch {
  std::vector<CurveGinRecord> records;
  long long cone_genus = 0;
  long long max_i = -1;  // over records satisfying all final filters
  // witness data: parent ideal + rewritten leaf, for history reconstruction
  std::unordered_map<MonomialIdeal, std::pair<MonomialIdeal, Monomial>, MonomialIdealHash>
      parent;

  RewriteHistory history_of(const MonomialIdeal& I, const MonomialIdeal& start) const {
    RewriteHistory H;
    H.final = I;
    std::vector<RewriteEvent> rev;
    MonomialIdeal cur = I;
    while (!(cur == start)) {
      auto it = parent.find(cur);
      if (it == parent.end()) throw ginwb_error("history_of: unknown ideal");
      rev.push_back(make_event(RuleFamily::C, it->second.second, 4));
      cur = it->second.first;
    }
    H.initial = start;
    H.events.assign(rev.rbegin(), rev.rend());
    return H;
  }
};

/// Breadth-first enumeration of the curve gins reachable from the cone over
/// a hyperplane gin by at most `budget` legal C-rewrites. States are
/// deduplicated by the resulting ideal ((g, i) are intrinsic to it). The
/// frontier may be partitioned across threads; results are canonical and
/// thread-count independent.
inline CurveGinSearch enumerate_curve_gins(const MonomialIdeal& hyp3, int budget,
                                           const ConstraintSet& C, int threads = 1) {
  MonomialIdeal start = cone_extend(hyp3, 2);
  auto [cd, cg] = one_dim_degree_genus(start);
  (void)cd;
  CurveGinSearch S;
  S.cone_genus = cg;
  if (budget > cg) throw ginwb_error("enumerate_curve_gins: budget exceeds cone genus");

  std::unordered_map<MonomialIdeal, int, MonomialIdealHash> seen;
  seen.emplace(start, 0);
  std::vector<MonomialIdeal> frontier = {start};

  struct Step {
    MonomialIdeal result;
    MonomialIdeal parent;
    Monomial leaf;
  };
  auto expand_one = [&](const MonomialIdeal& I, std::vector<Step>& out) {
    for (const auto& leaf : I.generators()) {
      if (C.curve_max_regularity > 0 && leaf.deg() + 1 > C.curve_max_regularity) continue;
      auto J = try_apply_rule(I, leaf, rule_index_for(leaf));
      if (!J) continue;
      if (C.curve_max_regularity > 0 && J->max_gen_degree() > C.curve_max_regularity) continue;
      if (C.min_h0_cubics >= 0 && h0_cubics(*J) < C.min_h0_cubics) continue;
      if (C.key_inference && !key_inference_admissible_ideal(*J)) continue;
      if (C.max_deg6_rewrites >= 0 && curve_i(*J) > C.max_deg6_rewrites) continue;
      out.push_back({std::move(*J), I, leaf});
    }
  };

  for (int lev = 0; lev < budget; ++lev) {
    int nt = std::max(1, threads);
    std::vector<std::vector<Step>> results(nt);
    if (nt == 1 || frontier.size() < 32) {
      for (const auto& I : frontier) expand_one(I, results[0]);
    } else {
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (int w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
          size_t k;
          while ((k = next.fetch_add(1)) < frontier.size()) expand_one(frontier[k], results[w]);
        });
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Step> merged;
    for (auto& r : results)
      for (auto& st : r) merged.push_back(std::move(st));
    // canonical order so the merge (and hence the search) is deterministic
    std::sort(merged.begin(), merged.end(), [](const Step& a, const Step& b) {
      if (!(a.result == b.result)) return a.result < b.result;
      if (!(a.parent == b.parent)) return a.parent < b.parent;
      return a.leaf < b.leaf;
    });
    std::vector<MonomialIdeal> nxt;
    for (auto& st : merged) {
      if (seen.count(st.result)) continue;
      seen.emplace(st.result, lev + 1);
      S.parent.emplace(st.result, std::make_pair(st.parent, st.leaf));
      nxt.push_back(st.result);
    }
    frontier = std::move(nxt);
    if (frontier.empty()) break;
  }

  for (auto& [I, lev] : seen) {
    CurveGinRecord r;
    r.ideal = I;
    r.rewrites = lev;
    r.g = cg - lev;
    r.i = curve_i(I);
    r.h0_cubics = h0_cubics(I);
    r.key_inference_ok = key_inference_admissible_ideal(I);
    r.in_h0_window = (C.min_h0_cubics < 0 || r.h0_cubics >= C.min_h0_cubics) &&
                     (C.max_h0_cubics < 0 || r.h0_cubics <= C.max_h0_cubics);
    if (r.in_h0_window && S.max_i < r.i) S.max_i = r.i;
    S.records.push_back(std::move(r));
  }
  std::sort(S.records.begin(), S.records.end(),
            [](const CurveGinRecord& a, const CurveGinRecord& b) { return a.ideal < b.ideal; });
  return S;
}

/// Maximum i over the curve gins reachable from the given hyperplane gin
/// under a regularity cap and an h^0(cubics) window, with the key-inference
/// filter active.
inline long long max_i_given(const MonomialIdeal& hyp3, int curve_reg, int h0_min, int h0_max,
                             bool key_inf = true, int threads = 1) {
  ConstraintSet C;
  C.curve_max_regularity = curve_reg;
  C.key_inference = key_inf;
  C.min_h0_cubics = h0_min;
  C.max_h0_cubics = h0_max;
  MonomialIdeal start = cone_extend(hyp3, 2);
  auto [d, cg] = one_dim_degree_genus(start);
  (void)d;
  auto S = enumerate_curve_gins(hyp3, static_cast<int>(cg), C, threads);
  return S.max_i;
}

// ---------------------------------------------------------------------------
// restricted-tangent-bundle strata
// ---------------------------------------------------------------------------

/// Nonincreasing integer sequence with a fixed sum (a splitting type).
struct SplittingType {
  std::vector<int> a;

  long long sum() const {
    long long s = 0;
    for (int v : a) s += v;
    return s;
  }
  bool valid() const {
    for (size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] < a[i + 1]) return false;
    return true;
  }
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }
  friend bool operator==(const SplittingType& x, const SplittingType& y) { return x.a == y.a; }
  friend bool operator<(const SplittingType& x, const SplittingType& y) { return x.a < y.a; }
};

/// Expected codimension of the stratum of maps with the given splitting:
/// sum over ordered pairs i != j of max(0, a_i - a_j - 1).
inline long long rtb_codimension(const SplittingType& s) {
  long long c = 0;
  for (size_t i = 0; i < s.a.size(); ++i)
    for (size_t j = 0; j < s.a.size(); ++j)
      if (i != j) c += std::max(0, s.a[i] - s.a[j] - 1);
  return c;
}

/// All splitting strata for degree-d rank-r bundles with nonnegative parts,
/// with their expected codimensions.
inline std::vector<std::pair<SplittingType, long long>> rtb_strata(int d, int r,
                                                                   int min_part = 0) {
  std::vector<std::pair<SplittingType, long long>> out;
  std::vector<int> cur(r);
  std::function<void(int, int, int)> rec = [&](int idx, int rem, int hi) {
    if (idx == r - 1) {
      if (rem <= hi && rem >= min_part) {
        cur[idx] = rem;
        SplittingType s{cur};
        out.emplace_back(s, rtb_codimension(s));
      }
      return;
    }
    for (int v = std::min(hi, rem); v >= min_part; --v) {
      cur[idx] = v;
      rec(idx + 1, rem - v, v);
    }
  };
  rec(0, d, d);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// A curve locus is harmless when its codimension exceeds g+i, or when
/// g+i < min(2g, 12).
inline bool nonproblematic(long long g, long long i, long long codim) {
  return codim > g + i || g + i < std::min(2 * g, 12LL);
}

}  // namespace ginwb
