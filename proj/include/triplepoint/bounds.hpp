#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace triplepoint {

/// Multiset of spectral numbers: strictly increasing values with multiplicities.
struct SpectrumDivisor {
  std::vector<std::pair<mpq_class, long long>> entries;

  long long total() const;
  bool operator==(const SpectrumDivisor&) const = default;
};

/// Spectrum of x0^a0 + ... + xn^an: all sums i0/a0 + ... + in/an with 1 <= ij < aj.
SpectrumDivisor brieskorn_spectrum(const std::vector<int>& exponents);
/// Spectrum of a cone over a smooth plane curve of degree d, i.e. exponents (d, d, d).
SpectrumDivisor homogeneous_surface_spectrum(int d);

/// Total multiplicity of spectral values strictly inside (a, b).
long long interval_count(const SpectrumDivisor& s, const mpq_class& a, const mpq_class& b);

struct SpectrumWitness {
  long long bound = 0;
  mpq_class alpha;       // the optimal interval is (alpha, alpha + 1)
  long long ambient = 0;  // count for the degree-d spectrum
  long long local = 0;    // count for the singularity
};

/// Semicontinuity bound: min over unit intervals of floor(ambient / local).
SpectrumWitness spectrum_bound_witness(int d, const SpectrumDivisor& sing);
long long spectrum_bound(int d, const SpectrumDivisor& sing);

/// Spectra of an ordinary double point and an ordinary triple point.
SpectrumDivisor node_spectrum();
SpectrumDivisor triple_point_spectrum();

long long polar_bound(int d);    // d >= 5
long long miyaoka_bound(int d);  // d >= 7
long long curve_bound(long long c, int d);
long long surface_bound(long long v, int d);
long long combined_bound(int d);  // d >= 3

struct BoundsRow {
  int d = 0;
  std::optional<long long> polar;
  std::optional<long long> miyaoka;
  std::optional<long long> spectrum;
  long long combined = 0;
};
BoundsRow bounds_row(int d);

}  // namespace triplepoint
