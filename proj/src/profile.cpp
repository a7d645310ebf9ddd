#include "xtar/profile.hpp"

#include <algorithm>

namespace xtar {

bool XProfile::contains(Mask s) const {
  int k = popcount(s);
  if (k >= static_cast<int>(sets_by_size.size())) return false;
  const auto& layer = sets_by_size[k];
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::size_t XProfile::total_sets() const {
  std::size_t t = 0;
  for (const auto& layer : sets_by_size) t += layer.size();
  return t;
}

XProfile build_profile(const Graph& g, XRuleKind rule, bool allow_large) {
  int n = g.order();
  if (n > 24 && !allow_large)
    throw std::invalid_argument("build_profile: order > 24 requires the override flag");
  if (n > 30) throw std::invalid_argument("build_profile: order > 30 is not supported");

  std::vector<char> feasible(std::size_t{1} << n, 0);
  XProfile p{g, rule, std::vector<std::vector<Mask>>(n + 1), {}, 0, 0};

  // Sweep by cardinality layer: once any subset of s is known feasible,
  // superset closure marks s without evaluating the rule.
  for (int k = 0; k <= n; ++k) {
    Mask s = full_mask(k);
    Mask last = s << (n - k);
    for (;;) {
      bool feas = false;
      for (Mask rest = s; rest && !feas; rest &= rest - 1)
        feas = feasible[s & ~(rest & -rest)];
      bool minimal = false;
      if (!feas) {
        feas = is_x_set(g, s, rule);
        minimal = feas && s != 0;
      }
      if (feas) {
        feasible[s] = 1;
        p.sets_by_size[k].push_back(s);
        if (minimal) p.minimal_sets.push_back(s);
      }
      if (s == last || s == 0) break;
      Mask c = s & -s;
      Mask r = s + c;
      s = r | (((s ^ r) >> 2) / c);  // next mask with k bits set
    }
  }

  p.x_number = n;
  for (int k = 0; k <= n; ++k)
    if (!p.sets_by_size[k].empty()) {
      p.x_number = k;
      break;
    }
  p.upper_x = p.minimal_sets.empty() ? 0 : popcount(p.minimal_sets.back());
  std::sort(p.minimal_sets.begin(), p.minimal_sets.end(), [](Mask a, Mask b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return p;
}

std::vector<std::uint64_t> x_polynomial(const XProfile& profile) {
  std::vector<std::uint64_t> coef(profile.graph.order() + 1, 0);
  for (std::size_t k = 0; k < profile.sets_by_size.size(); ++k)
    coef[k] = profile.sets_by_size[k].size();
  return coef;
}

std::vector<Mask> minimal_sets_of_size(const XProfile& profile, int k) {
  std::vector<Mask> out;
  for (Mask s : profile.minimal_sets)
    if (popcount(s) == k) out.push_back(s);
  return out;
}

}  // namespace xtar
