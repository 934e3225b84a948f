#pragma once

#include <optional>
#include <unordered_set>

#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

/// Generator tree of a Borel-fixed saturated monomial ideal: the trie of the
/// sorted variable strings of the minimal generators. Leaves are exactly the
/// minimal generators; the internal (nonleaf) vertices are the standard
/// monomials below them, so the nonleaf count of a zero-dimensional ideal is
/// its colength. Labels use the first nvars-1 ambient variables only
/// (the ideal is saturated).
class GeneratorTree {
public:
  GeneratorTree() = default;
  explicit GeneratorTree(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
    if (!ideal_.is_zero_ideal()) {
      if (!is_borel_fixed(ideal_)) throw ginwb_error("tree requires a Borel-fixed ideal");
      if (!is_saturated(ideal_)) throw ginwb_error("tree requires a saturated ideal");
    }
    rebuild();
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  int alphabet_size() const { return ideal_.nvars() - 1; }

  const std::vector<Monomial>& nonleaves() const { return nonleaves_; }
  long long nonleaf_count() const {
    // the root of the zero ideal's tree has no children and does not count
    return ideal_.is_zero_ideal() ? 0 : static_cast<long long>(nonleaves_.size());
  }

  bool is_leaf(const Monomial& m) const {
    return std::find(ideal_.generators().begin(), ideal_.generators().end(), m) !=
           ideal_.generators().end();
  }
  bool is_nonleaf(const Monomial& m) const { return nonleaf_set_.count(m) > 0; }

  /// Number of nonleaf vertices of degree strictly greater than t.
  long long nonleaves_above(int t) const {
    long long c = 0;
    for (const auto& m : nonleaves_)
      if (m.deg() > t) ++c;
    return c;
  }

  /// Indented dump, one vertex per line: `label@degree [leaf]`.
  std::string dump() const {
    std::string out;
    dump_rec(Monomial(), 0, out);
    return out;
  }

private:
  void rebuild() {
    std::unordered_set<Monomial, MonomialHash> nl;
    for (const auto& g : ideal_.generators())
      for (const auto& p : g.string_prefixes()) nl.insert(p);
    nonleaves_.assign(nl.begin(), nl.end());
    std::sort(nonleaves_.begin(), nonleaves_.end(), [](const Monomial& a, const Monomial& b) {
      if (a.deg() != b.deg()) return a.deg() < b.deg();
      return a < b;
    });
    nonleaf_set_ = std::move(nl);
  }

  void dump_rec(const Monomial& v, int depth, std::string& out) const {
    for (int i = 0; i < depth; ++i) out += "  ";
    if (v.is_one() && depth == 0)
      out += ".@0";
    else
      out += "x" + std::to_string(v.max_var()) + "@" + std::to_string(v.deg());
    bool leaf = is_leaf(v);
    if (leaf) out += " [leaf]";
    out += "\n";
    if (leaf) return;
    int lo = std::max(0, v.max_var());
    for (int j = lo; j < alphabet_size(); ++j) {
      Monomial c = v.times_var(j);
      if (is_leaf(c) || is_nonleaf(c)) dump_rec(c, depth + 1, out);
    }
  }

  MonomialIdeal ideal_;
  std::vector<Monomial> nonleaves_;
  std::unordered_set<Monomial, MonomialHash> nonleaf_set_;
};

inline GeneratorTree tree_of(const MonomialIdeal& I) { return GeneratorTree(I); }
inline MonomialIdeal ideal_of(const GeneratorTree& T) { return T.ideal(); }

enum class RuleFamily { Lambda, C };

/// One rewriting step. The rule index is the pattern class of the target
/// (1 = pure x0 power, 2 = x0/x1 only, ...; the initial rule expands the
/// root of the empty tree). occurrence_degree is the degree of the newly
/// created children, i.e. target degree + 1.
struct RewriteEvent {
  RuleFamily family = RuleFamily::Lambda;
  int rule = 0;
  Monomial target;
  int occurrence_degree = 0;
};

/// Rule index of a non-root leaf: 1 for pure x0 powers, 2 when x1 is the
/// largest variable, and so on. The initial rule (root expansion) has index
/// alphabet + 1.
inline int rule_index_for(const Monomial& leaf) { return leaf.max_var() + 1; }

/// Children glued by the rewriting rules: leaf * x_j for every alphabet
/// variable j >= max_var(leaf). Specialized to the Lambda tables when the
/// alphabet has three letters (hyperplane sections in P^3) or two (in P^2),
/// and to the C tables for four (curves in P^4) or three letters.
inline std::vector<Monomial> rule_children(const Monomial& leaf, int alphabet) {
  std::vector<Monomial> out;
  for (int j = std::max(0, leaf.max_var()); j < alphabet; ++j)
    out.push_back(leaf.times_var(j));
  return out;
}

/// Apply a rewriting rule at `leaf`; returns nothing when the application is
/// illegal. Legality = the leaf is a minimal generator matching the rule
/// pattern and the rewritten ideal is still Borel-fixed. (Removing a leaf
/// whose presence is forced by another generator, e.g. x0^4 next to x0^3*x1,
/// would leave a non-Borel-fixed ideal; such steps are rejected.)
inline std::optional<MonomialIdeal> try_apply_rule(const MonomialIdeal& I,
                                                   const Monomial& leaf, int rule) {
  int alphabet = I.nvars() - 1;
  if (I.is_zero_ideal()) {
    // initial rule: the root sprouts the full alphabet
    if (rule != alphabet + 1 || !leaf.is_one()) return std::nullopt;
    std::vector<Monomial> gens;
    for (int j = 0; j < alphabet; ++j) gens.push_back(Monomial().times_var(j));
    return MonomialIdeal(I.nvars(), gens);
  }
  const auto& gens = I.generators();
  if (std::find(gens.begin(), gens.end(), leaf) == gens.end()) return std::nullopt;
  if (rule != rule_index_for(leaf)) return std::nullopt;
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (g != leaf) out.push_back(g);
  for (const auto& c : rule_children(leaf, alphabet)) out.push_back(c);
  MonomialIdeal J(I.nvars(), std::move(out));
  if (!is_borel_fixed(J)) return std::nullopt;
  return J;
}

inline GeneratorTree apply_lambda(const GeneratorTree& T, const Monomial& leaf, int rule) {
  auto J = try_apply_rule(T.ideal(), leaf, rule);
  if (!J) throw ginwb_error("apply_lambda: rule pattern mismatch or illegal rewrite");
  return GeneratorTree(*J);
}

inline GeneratorTree apply_c(const GeneratorTree& T, const Monomial& leaf, int rule) {
  auto J = try_apply_rule(T.ideal(), leaf, rule);
  if (!J) throw ginwb_error("apply_c: rule pattern mismatch or illegal rewrite");
  return GeneratorTree(*J);
}

/// Ordered record of rewrites from an initial ideal; replaying the events
/// must reproduce `final`.
struct RewriteHistory {
  MonomialIdeal initial;
  std::vector<RewriteEvent> events;
  MonomialIdeal final;

  MonomialIdeal replay() const {
    MonomialIdeal cur = initial;
    for (const auto& ev : events) {
      auto nxt = try_apply_rule(cur, ev.target, ev.rule);
      if (!nxt) throw ginwb_error("history replay failed at " + monomial_str(ev.target));
      cur = *nxt;
    }
    return cur;
  }
  bool consistent() const { return replay() == final; }

  std::string serialize() const {
    std::string s;
    for (const auto& ev : events) {
      if (!s.empty()) s += "; ";
      s += (ev.family == RuleFamily::Lambda ? "L" : "C");
      s += std::to_string(ev.rule) + " " + monomial_str(ev.target);
    }
    return s;
  }
};

inline RewriteEvent make_event(RuleFamily fam, const Monomial& target, int alphabet) {
  RewriteEvent ev;
  ev.family = fam;
  ev.rule = target.is_one() ? alphabet + 1 : rule_index_for(target);
  ev.target = target;
  ev.occurrence_degree = target.deg() + 1;
  return ev;
}

/// Number of events whose target leaf has degree strictly greater than t
/// (equivalently occurrence degree > t+1). For a C-history with t = 5 this
/// is h^1 of the resulting curve ideal twisted by 5; for a Lambda-history it
/// is h^1 of the point ideal twisted by t. Matches the nonleaf count of the
/// final tree above degree t when the initial tree has no such vertices.
inline long long rewrite_tally(const RewriteHistory& H, int t) {
  long long c = 0;
  for (const auto& ev : H.events)
    if (ev.target.deg() > t) ++c;
  return c;
}

/// Arithmetic genus of the curve from a C-history: the cone genus of the
/// initial ideal minus the number of rewrites.
inline long long curve_genus(const RewriteHistory& H) {
  auto [d, g] = one_dim_degree_genus(H.initial);
  (void)d;
  return g - static_cast<long long>(H.events.size());
}

}  // namespace ginwb
