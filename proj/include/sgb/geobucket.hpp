// Geobucket accumulator for reduction loops: the working polynomial is kept
// as a sum of sorted term lists in capacity-bounded buckets, so cancelling a
// leading term costs the reducer's length instead of a full-polynomial merge.
#pragma once

#include <optional>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

class Geobucket {
 public:
  Geobucket(const Ring& ring, std::vector<Term> initial) : ring_(&ring) {
    add_terms(std::move(initial));
  }

  // Removes and returns the leading term of the represented sum, combining
  // equal head monomials across buckets and skipping exact cancellations.
  std::optional<Term> pop_lead() {
    const PrimeField& F = ring_->field;
    while (true) {
      int best = -1;
      for (int i = 0; i < static_cast<int>(buckets_.size()); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || mono_cmp(buckets_[i].head().mono, buckets_[best].head().mono,
                                 ring_->order) == std::strong_ordering::greater)
          best = i;
      }
      if (best < 0) return std::nullopt;
      const Monomial lead = buckets_[best].head().mono;
      Fp coeff = F.zero();
      for (auto& b : buckets_) {
        if (!b.empty() && b.head().mono == lead) {
          coeff = F.add(coeff, b.head().coeff);
          ++b.pos;
        }
      }
      if (!(coeff == F.zero())) return Term{lead, coeff};
    }
  }

  // Adds -c * t * [first, last).
  void sub_mul(Fp c, const Monomial& t, const Term* first, const Term* last) {
    const PrimeField& F = ring_->field;
    std::vector<Term> ts;
    ts.reserve(static_cast<std::size_t>(last - first));
    for (const Term* it = first; it != last; ++it)
      ts.push_back({mono_mul(t, it->mono), F.neg(F.mul(c, it->coeff))});
    add_terms(std::move(ts));
  }

  // Pops everything, descending.
  std::vector<Term> drain() {
    std::vector<Term> out;
    while (auto t = pop_lead()) out.push_back(std::move(*t));
    return out;
  }

 private:
  struct Bucket {
    std::vector<Term> data;
    std::size_t pos = 0;
    bool empty() const { return pos >= data.size(); }
    std::size_t size() const { return data.size() - pos; }
    const Term& head() const { return data[pos]; }
  };

  static std::size_t cap(std::size_t i) { return std::size_t{1} << (2 * i + 2); }

  // Two-way sorted merge combining equal monomials and dropping zeros.
  std::vector<Term> merge(const Bucket& b, std::vector<Term>& ts) const {
    const PrimeField& F = ring_->field;
    std::vector<Term> out;
    out.reserve(b.size() + ts.size());
    std::size_t i = b.pos, j = 0;
    while (i < b.data.size() && j < ts.size()) {
      auto ord = mono_cmp(b.data[i].mono, ts[j].mono, ring_->order);
      if (ord == std::strong_ordering::greater) {
        out.push_back(b.data[i++]);
      } else if (ord == std::strong_ordering::less) {
        out.push_back(std::move(ts[j++]));
      } else {
        Fp v = F.add(b.data[i].coeff, ts[j].coeff);
        if (!(v == F.zero())) out.push_back({b.data[i].mono, v});
        ++i;
        ++j;
      }
    }
    for (; i < b.data.size(); ++i) out.push_back(b.data[i]);
    for (; j < ts.size(); ++j) out.push_back(std::move(ts[j]));
    return out;
  }

  void add_terms(std::vector<Term> ts) {
    if (ts.empty()) return;
    std::size_t i = 0;
    while (cap(i) < ts.size()) ++i;
    while (true) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = Bucket{std::move(ts), 0};
        return;
      }
      std::vector<Term> merged = merge(buckets_[i], ts);
      buckets_[i] = Bucket{};
      if (merged.size() <= cap(i)) {
        buckets_[i] = Bucket{std::move(merged), 0};
        return;
      }
      ts = std::move(merged);  // carry into the next bucket
      ++i;
    }
  }

  const Ring* ring_;
  std::vector<Bucket> buckets_;
};

}  // namespace sgb
