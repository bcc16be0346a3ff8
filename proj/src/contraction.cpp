#include "condorcet/contraction.hpp"

#include <algorithm>

#include "condorcet/errors.hpp"

namespace condorcet {

namespace {

AltMask checked_subset(const Domain& domain, std::span<const Alt> subset) {
  if (subset.empty()) throw invalid_argument_error("contraction subset is empty");
  AltMask mask = 0;
  for (Alt a : subset) {
    if (a >= domain.m()) throw invalid_argument_error("unknown alternative " + std::to_string(a));
    if (mask >> a & 1u) throw invalid_argument_error("repeated alternative in subset");
    mask |= AltMask{1} << a;
  }
  return mask;
}

std::array<Alt, 3> sorted_triple(const Domain& domain, std::array<Alt, 3> t) {
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw invalid_argument_error("triple has repeated alternatives");
  if (t[2] >= domain.m()) throw invalid_argument_error("triple names an unknown alternative");
  return t;
}

std::vector<Alt> slots_to_alts(std::uint8_t forbidden_free, const std::array<Alt, 3>& t) {
  std::vector<Alt> out;
  for (int s = 0; s < 3; ++s)
    if (forbidden_free >> s & 1u) out.push_back(t[s]);
  return out;
}

}  // namespace

std::vector<LinearOrder> contract(const Domain& domain, std::span<const Alt> subset) {
  const AltMask mask = checked_subset(domain, subset);
  std::vector<LinearOrder> out;
  out.reserve(domain.size());
  for (const auto& o : domain) out.push_back(o.restricted(mask));
  return out;
}

Domain simplify_contraction(const Domain& domain, std::span<const Alt> subset) {
  auto orders = contract(domain, subset);
  return Domain(domain.alternatives().restricted(subset), std::move(orders));
}

std::optional<Alt> TripleProfile::unique_never_bottom() const {
  if (never_bottom.size() == 1) return never_bottom.front();
  return std::nullopt;
}

std::optional<Alt> TripleProfile::unique_never_top() const {
  if (never_top.size() == 1) return never_top.front();
  return std::nullopt;
}

int patterns::pattern_of(std::size_t pi, std::size_t pj, std::size_t pk) {
  static constexpr std::array<int, 8> kByCode{5, 3, -1, 2, 4, -1, 1, 0};
  const int code = (pi < pj) << 2 | (pi < pk) << 1 | (pj < pk);
  return kByCode[code];
}

TripleProfile classify_triple(const Domain& domain, std::array<Alt, 3> triple) {
  const auto t = sorted_triple(domain, triple);
  std::uint8_t mask = 0;
  for (const auto& o : domain)
    mask |= std::uint8_t(1u << patterns::pattern_of(o.position(t[0]), o.position(t[1]),
                                                    o.position(t[2])));
  TripleProfile p;
  p.triple = t;
  for (int i = 0; i < 6; ++i) {
    if (!(mask >> i & 1u)) continue;
    const auto& slots = patterns::kOrders[i];
    p.restricted_orders.push_back({t[slots[0]], t[slots[1]], t[slots[2]]});
  }
  std::sort(p.restricted_orders.begin(), p.restricted_orders.end());
  std::uint8_t bottom = 0, top = 0, middle = 0;
  for (int s = 0; s < 3; ++s) {
    if (!(mask & patterns::kForbiddenBottom[s])) bottom |= std::uint8_t(1u << s);
    if (!(mask & patterns::kForbiddenTop[s])) top |= std::uint8_t(1u << s);
    if (!(mask & patterns::kForbiddenMiddle[s])) middle |= std::uint8_t(1u << s);
  }
  p.never_bottom = slots_to_alts(bottom, t);
  p.never_top = slots_to_alts(top, t);
  p.never_middle = slots_to_alts(middle, t);
  return p;
}

TripleCensus::TripleCensus(const Domain& domain)
    : m_(domain.m()), masks_(m_ * m_ * m_, 0) {
  std::array<std::size_t, kMaxAlternatives> pos{};
  for (const auto& o : domain) {
    for (std::size_t p = 0; p < m_; ++p) pos[o[p]] = p;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i + 1; j < m_; ++j)
        for (std::size_t k = j + 1; k < m_; ++k)
          masks_[(i * m_ + j) * m_ + k] |=
              std::uint8_t(1u << patterns::pattern_of(pos[i], pos[j], pos[k]));
  }
}

std::uint8_t TripleCensus::mask(Alt x, Alt y, Alt z) const {
  std::array<Alt, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return masks_[(std::size_t{t[0]} * m_ + t[1]) * m_ + t[2]];
}

int TripleCensus::unique_never_bottom_slot(Alt x, Alt y, Alt z) const {
  const auto mask = this->mask(x, y, z);
  int found = -1;
  for (int s = 0; s < 3; ++s) {
    if (mask & patterns::kForbiddenBottom[s]) continue;
    if (found >= 0) return -1;
    found = s;
  }
  return found;
}

bool is_condorcet(const Domain& domain) {
  const std::size_t m = domain.m();
  if (m < 3 || domain.size() < 3) return true;
  const TripleCensus census(domain);
  for (Alt i = 0; i < m; ++i)
    for (Alt j = i + 1; j < m; ++j)
      for (Alt k = j + 1; k < m; ++k)
        if (patterns::has_cycle(census.mask(i, j, k))) return false;
  return true;
}

bool is_condorcet_bruteforce(const Domain& domain) {
  const std::size_t m = domain.m();
  const auto realises = [](const LinearOrder& v, Alt x, Alt y, Alt z) {
    return v.prefers(x, y) && v.prefers(y, z);
  };
  for (Alt a1 = 0; a1 < m; ++a1)
    for (Alt a2 = 0; a2 < m; ++a2)
      for (Alt a3 = 0; a3 < m; ++a3) {
        if (a1 == a2 || a2 == a3 || a1 == a3) continue;
        bool v1 = false, v2 = false, v3 = false;
        for (const auto& v : domain) {
          v1 = v1 || realises(v, a1, a2, a3);
          v2 = v2 || realises(v, a2, a3, a1);
          v3 = v3 || realises(v, a3, a1, a2);
        }
        if (v1 && v2 && v3) return false;
      }
  return true;
}

}  // namespace condorcet
