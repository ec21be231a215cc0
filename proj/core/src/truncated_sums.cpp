#include "supercong/truncated_sums.hpp"

namespace supercong {

namespace {

constexpr std::array<SumSpec, 6> kSpecs = {{
    {SumId::S1, KernelId::K1, Companion::F8, Companion::L8, {{{1, 5}, {-30, 42}, {0, 0}}}},
    {SumId::S2, KernelId::K1, Companion::F8, Companion::L8, {{{25, 1}, {210, -30}, {0, 0}}}},
    {SumId::S3, KernelId::K2, Companion::F15, Companion::L15,
     {{{336, 150}, {1818, 810}, {2440, 1080}}}},
    {SumId::S4, KernelId::K2, Companion::F15, Companion::L15,
     {{{750, 336}, {4050, 1818}, {5400, 2440}}}},
    {SumId::S5, KernelId::K3, Companion::U, Companion::V, {{{640, 13}, {800, 16}, {0, 0}}}},
    {SumId::S6, KernelId::K3, Companion::U, Companion::V, {{{1560, 32}, {1920, 40}, {0, 0}}}},
}};

// Horner over the three coefficient pairs.
Integer weight(const SumSpec& spec, unsigned long n, const Integer& first, const Integer& second) {
  Integer out = 0;
  for (std::size_t j = spec.coeffs.size(); j-- > 0;) {
    out *= n;
    out += spec.coeffs[j].f * first + spec.coeffs[j].l * second;
  }
  return out;
}

}  // namespace

std::string_view sum_name(SumId id) {
  switch (id) {
    case SumId::S1: return "S1";
    case SumId::S2: return "S2";
    case SumId::S3: return "S3";
    case SumId::S4: return "S4";
    case SumId::S5: return "S5";
    case SumId::S6: return "S6";
  }
  return "?";
}

const SumSpec& sum_spec(SumId id) { return kSpecs.at(static_cast<std::size_t>(id)); }

std::span<const SumSpec> builtin_sum_specs() { return kSpecs; }

ExactTermStream::ExactTermStream(const SumSpec& spec)
    : spec_(spec),
      kernel_(spec.kernel),
      first_(companion_spec(spec.first)),
      second_(companion_spec(spec.second)) {}

Rational ExactTermStream::value() const {
  Rational out = kernel_.value() * Rational(weight(spec_, index(), first_.value(), second_.value()));
  out.canonicalize();
  return out;
}

void ExactTermStream::advance() {
  kernel_.advance();
  first_.advance();
  second_.advance();
}

Rational term_exact(const SumSpec& spec, unsigned long n) {
  ExactTermStream stream(spec);
  while (stream.index() < n) stream.advance();
  return stream.value();
}

Rational sum_exact(const SumSpec& spec, unsigned long length) {
  Rational total = 0;
  ExactTermStream stream(spec);
  for (unsigned long n = 0; n < length; ++n, stream.advance()) total += stream.value();
  total.canonicalize();
  return total;
}

Residue sum_mod(const SumSpec& spec, unsigned long length, const RingDescriptor& ring) {
  ModularKernelStream kernel(spec.kernel, ring);
  SecondOrderStream first(companion_spec(spec.first), ring);
  SecondOrderStream second(companion_spec(spec.second), ring);

  Integer total = 0;
  Integer w;
  for (unsigned long n = 0; n < length; ++n) {
    const Residue k = kernel.value().to_residue();
    if (!k.is_zero()) {
      w = weight(spec, n, first.value(), second.value());
      total += k.rep() * w;
      ring.reduce_in_place(total);
    }
    kernel.advance();
    first.advance();
    second.advance();
  }
  return {ring, total};
}

}  // namespace supercong
