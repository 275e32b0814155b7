#include "sgb/signature.hpp"

namespace sgb {

std::strong_ordering sig_cmp(const Signature& a, const Signature& b, const SigOrderSpec& spec) {
  if (spec.kind == SigOrderKind::pot) {
    if (a.idx != b.idx) return a.idx <=> b.idx;
    return mono_cmp(a.mono, b.mono, spec.base);
  }
  auto ord = mono_cmp(mono_mul(a.mono, spec.lead_of_gen[a.idx]),
                      mono_mul(b.mono, spec.lead_of_gen[b.idx]), spec.base);
  if (ord != std::strong_ordering::equal) return ord;
  return a.idx <=> b.idx;
}

bool sig_divides(const Signature& d, const Signature& s) {
  return d.idx == s.idx && mono_divides(d.mono, s.mono);
}

Signature sig_mul(const Monomial& t, const Signature& s) {
  return Signature{mono_mul(t, s.mono), s.idx};
}

}  // namespace sgb
