#include "seifert/seifert_data.hpp"

#include <algorithm>

namespace seifert {

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void validate_entries(const std::vector<Int>& entries) {
  int ones = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1)
      throw std::invalid_argument("multiplicities must be positive");
    if (entries[i] == 1) {
      ++ones;
      if (ones > 1)
        throw std::invalid_argument("at most one order-1 slot is allowed");
      if (i + 1 != entries.size())
        throw std::invalid_argument("an order-1 slot must come last");
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (gcd(entries[i], entries[j]) != 1)
        throw std::invalid_argument("multiplicities must be pairwise coprime");
}

}  // namespace

Multiplicities::Multiplicities(std::vector<Int> entries) {
  validate_entries(entries);
  entries_ = std::move(entries);
}

Multiplicities Multiplicities::sorted(std::vector<Int> entries) {
  std::sort(entries.begin(), entries.end());
  // a single 1 sorts first; it belongs in the last slot
  if (!entries.empty() && entries.front() == 1 &&
      (entries.size() == 1 || entries[1] != 1))
    std::rotate(entries.begin(), entries.begin() + 1, entries.end());
  return Multiplicities(std::move(entries));
}

std::pair<Multiplicities, int> Multiplicities::with_fiber_order(
    std::vector<Int> entries, const Int& order) {
  if (order < 1) throw std::invalid_argument("fiber order must be positive");
  // drop order-1 slots; they are re-appended only when the regular fiber
  // itself is chosen
  std::vector<Int> rest;
  for (const Int& a : entries)
    if (a != 1) rest.push_back(a);

  if (order == 1) {
    std::sort(rest.begin(), rest.end());
    rest.push_back(1);
    Multiplicities m(std::move(rest));
    return {m, static_cast<int>(m.size())};
  }

  auto it = std::find(rest.begin(), rest.end(), order);
  if (it == rest.end())
    throw std::invalid_argument("no fiber of order " + order.get_str());
  rest.erase(it);
  std::sort(rest.begin(), rest.end());
  rest.push_back(order);
  Multiplicities m(std::move(rest));
  return {m, static_cast<int>(m.size())};
}

const Int& Multiplicities::last() const {
  if (entries_.empty()) throw std::invalid_argument("empty multiplicities");
  return entries_.back();
}

Int Multiplicities::product() const {
  Int p = 1;
  for (const Int& a : entries_) p *= a;
  return p;
}

Int Multiplicities::alpha() const {
  Int p = 1;
  for (std::size_t j = 0; j + 1 < entries_.size(); ++j) p *= entries_[j];
  return p;
}

int Multiplicities::singular_count() const {
  int c = 0;
  for (const Int& a : entries_)
    if (a >= 2) ++c;
  return c;
}

Int SeifertInvariants::product() const {
  Int p = 1;
  for (const auto& [a, b] : pairs) p *= a;
  return p;
}

Int SeifertInvariants::alpha() const {
  Int p = 1;
  for (std::size_t j = 0; j + 1 < pairs.size(); ++j) p *= pairs[j].first;
  return p;
}

const Int& SeifertInvariants::last_a() const {
  if (pairs.empty()) throw std::invalid_argument("no fiber slots");
  return pairs.back().first;
}

const Int& SeifertInvariants::last_b() const {
  if (pairs.empty()) throw std::invalid_argument("no fiber slots");
  return pairs.back().second;
}

Int SeifertInvariants::eq1_value() const {
  Int p = product();
  Int v = -e * p;
  for (const auto& [a, b] : pairs) v += b * (p / a);
  return v;
}

SeifertInvariants from_multiplicities(const Multiplicities& m) {
  Int p = m.product();
  SeifertInvariants inv;
  inv.pairs.reserve(m.size());
  for (const Int& a : m.entries()) {
    if (a == 1) {
      inv.pairs.emplace_back(a, Int(0));
      continue;
    }
    // (P/a) b = -1 (mod a) has the unique solution b = a - (P/a)^{-1}
    Int t = mod_floor(p / a, a);
    inv.pairs.emplace_back(a, a - mod_inverse(t, a));
  }
  Int num = 1;  // P * (sum b_j/a_j + 1/P)
  for (const auto& [a, b] : inv.pairs) num += b * (p / a);
  if (!mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("from_multiplicities: central invariant not integral");
  inv.e = num / p;
  if (inv.e < 1)
    throw std::logic_error("from_multiplicities: central invariant < 1");
  if (inv.eq1_value() != -1)
    throw std::logic_error("from_multiplicities: defining equation violated");
  return inv;
}

bool verify_eq1(const SeifertInvariants& inv, int rhs) {
  if (rhs != 1 && rhs != -1)
    throw std::invalid_argument("verify_eq1: rhs must be +1 or -1");
  return inv.eq1_value() == rhs;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& inv) {
  SeifertInvariants out;
  Int n2 = 0;
  out.pairs.reserve(inv.pairs.size());
  for (const auto& [a, b] : inv.pairs) {
    if (a >= 2) {
      out.pairs.emplace_back(a, a - b);
      ++n2;
    } else {
      out.pairs.emplace_back(a, b);
    }
  }
  out.e = n2 - inv.e;
  return out;
}

SeifertInvariants canonicalize(const Int& e,
                               std::vector<std::pair<Int, Int>> pairs) {
  SeifertInvariants out;
  out.e = e;
  for (auto& [a, b] : pairs) {
    if (a < 1) throw std::invalid_argument("canonicalize: order must be positive");
    if (gcd(a, b) != 1)
      throw std::invalid_argument("canonicalize: pair is not coprime");
    // (a, b) -> (a, b - ka), e -> e - k keeps sum b_j/a_j - e fixed
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b -= k * a;
    out.e -= k;
  }
  out.pairs = std::move(pairs);
  return out;
}

SeifertInvariants pad_slots(SeifertInvariants inv, std::size_t n) {
  while (inv.pairs.size() < n) inv.pairs.emplace_back(Int(1), Int(0));
  return inv;
}

}  // namespace seifert
