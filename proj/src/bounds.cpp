#include "triplepoint/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "triplepoint/error.hpp"

namespace triplepoint {

long long SpectrumDivisor::total() const {
  long long n = 0;
  for (const auto& e : entries) n += e.second;
  return n;
}

SpectrumDivisor brieskorn_spectrum(const std::vector<int>& exponents) {
  if (exponents.empty()) throw Error("domain", "Brieskorn spectrum needs at least one exponent");
  for (int a : exponents) {
    if (a < 2) throw Error("domain", "Brieskorn exponents must be at least 2");
  }
  std::map<mpq_class, long long> counts{{mpq_class(0), 1}};
  for (int a : exponents) {
    std::map<mpq_class, long long> next;
    for (const auto& [v, m] : counts) {
      for (int i = 1; i < a; ++i) {
        mpq_class s = v + mpq_class(i, a);
        s.canonicalize();
        next[s] += m;
      }
    }
    counts = std::move(next);
  }
  return {{counts.begin(), counts.end()}};
}

SpectrumDivisor homogeneous_surface_spectrum(int d) { return brieskorn_spectrum({d, d, d}); }

SpectrumDivisor node_spectrum() { return brieskorn_spectrum({2, 2, 2}); }
SpectrumDivisor triple_point_spectrum() { return brieskorn_spectrum({3, 3, 3}); }

long long interval_count(const SpectrumDivisor& s, const mpq_class& a, const mpq_class& b) {
  long long n = 0;
  for (const auto& [v, m] : s.entries) {
    if (a < v && v < b) n += m;
  }
  return n;
}

SpectrumWitness spectrum_bound_witness(int d, const SpectrumDivisor& sing) {
  if (d < 3) throw Error("domain", "spectrum bound needs degree >= 3");
  if (sing.entries.empty()) throw Error("domain", "empty singularity spectrum");
  const SpectrumDivisor ambient = homogeneous_surface_spectrum(d);

  // The counts only change where an endpoint crosses a spectral value, so it
  // suffices to test those critical alphas and one point inside every gap.
  std::set<mpq_class> critical;
  for (const auto* s : {&ambient, &sing}) {
    for (const auto& e : s->entries) {
      critical.insert(e.first);
      critical.insert(e.first - 1);
    }
  }
  std::vector<mpq_class> candidates{*critical.begin() - 1};
  for (auto it = critical.begin(); it != critical.end(); ++it) {
    candidates.push_back(*it);
    auto next = std::next(it);
    if (next != critical.end()) candidates.push_back((*it + *next) / 2);
  }

  std::optional<SpectrumWitness> best;
  for (const auto& alpha : candidates) {
    const mpq_class beta = alpha + 1;
    long long local = interval_count(sing, alpha, beta);
    if (local == 0) continue;
    long long global = interval_count(ambient, alpha, beta);
    long long bound = global / local;
    if (!best || bound < best->bound) best = SpectrumWitness{bound, alpha, global, local};
  }
  return *best;
}

long long spectrum_bound(int d, const SpectrumDivisor& sing) { return spectrum_bound_witness(d, sing).bound; }

long long polar_bound(int d) {
  if (d < 5) throw Error("domain", "polar bound needs degree >= 5");
  const long long n = d;
  if (d <= 6) return (n - 1) * (n * n + n - 3) / 18;
  return n * (n - 1) * (n - 4) / 6;
}

long long miyaoka_bound(int d) {
  if (d < 7) throw Error("domain", "Miyaoka bound needs degree >= 7");
  const long long n = d;
  return 2 * n * (n - 1) * (n - 1) / 27;
}

long long curve_bound(long long c, int d) {
  if (c < 1 || d < 2) throw Error("domain", "curve bound needs c >= 1 and d >= 2");
  return c * (d - 1) / 2;
}

long long surface_bound(long long v, int d) {
  if (v < 1 || d < 2) throw Error("domain", "surface bound needs v >= 1 and d >= 2");
  return v * d * (d - 1) / 6;
}

long long combined_bound(int d) {
  if (d < 3) throw Error("domain", "combined bound needs degree >= 3");
  if (d <= 4) return 1;
  const long long spec = spectrum_bound(d, triple_point_spectrum());
  if (d <= 6) return std::min(spec, polar_bound(d));
  return std::min(spec, miyaoka_bound(d));
}

BoundsRow bounds_row(int d) {
  BoundsRow row;
  row.d = d;
  if (d >= 5) row.polar = polar_bound(d);
  if (d >= 7) row.miyaoka = miyaoka_bound(d);
  if (d >= 3) row.spectrum = spectrum_bound(d, triple_point_spectrum());
  row.combined = combined_bound(d);
  return row;
}

}  // namespace triplepoint
