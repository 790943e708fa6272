#include "chebdyn/chebyshev.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {

void require_degree(int m) {
  if (m < 1) throw DomainError("Chebyshev index must be >= 1, got " + std::to_string(m));
}

template <class T>
T eval_recursive(Family family, int m, const T& z) {
  require_degree(m);
  T prev = T(2);
  T cur = z;
  for (int k = 1; k < m; ++k) {
    T next = z * cur;
    if (family == Family::P) {
      next = next - prev;
    } else {
      next = next + prev;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::P ? "P" : "Q"; }

Family parse_family(std::string_view text) {
  if (text == "P" || text == "p") return Family::P;
  if (text == "Q" || text == "q") return Family::Q;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected P or Q)");
}

IntPolynomial cheb_poly(Family family, int m) {
  require_degree(m);
  const IntPolynomial z{0, 1};
  IntPolynomial prev{2};
  IntPolynomial cur = z;
  for (int k = 1; k < m; ++k) {
    IntPolynomial next = cur.shifted(1);
    if (family == Family::P) {
      next -= prev;
    } else {
      next += prev;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational cheb_eval(Family family, int m, const Rational& z) { return eval_recursive(family, m, z); }
double cheb_eval(Family family, int m, double z) { return eval_recursive(family, m, z); }
std::complex<double> cheb_eval(Family family, int m, std::complex<double> z) {
  return eval_recursive(family, m, z);
}

ChebyshevMap::ChebyshevMap(Family family, int degree)
    : family_(family), degree_(degree) {
  if (degree < 2) throw DomainError("a Chebyshev map needs degree >= 2, got " + std::to_string(degree));
  poly_ = cheb_poly(family, degree);
}

Orbit<Rational> orbit(const ChebyshevMap& map, const Rational& z0, std::size_t k) {
  Orbit<Rational> out;
  std::map<Rational, std::size_t> seen;
  out.iterates.push_back(z0);
  seen.emplace(z0, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Rational next = map(out.iterates.back());
    out.iterates.push_back(next);
    auto [it, inserted] = seen.emplace(next, out.iterates.size() - 1);
    if (!inserted) {
      out.stop = OrbitStop::repeated;
      out.first_occurrence = it->second;
      break;
    }
  }
  return out;
}

Orbit<double> orbit(const ChebyshevMap& map, double z0, std::size_t k) {
  Orbit<double> out;
  out.iterates.push_back(z0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!std::isfinite(out.iterates.back()) || std::fabs(out.iterates.back()) > kOrbitOverflowGuard) {
      out.stop = OrbitStop::escaped;
      break;
    }
    out.iterates.push_back(map(out.iterates.back()));
  }
  if (out.stop == OrbitStop::completed && std::fabs(out.iterates.back()) > kOrbitOverflowGuard) {
    out.stop = OrbitStop::escaped;
  }
  return out;
}

PreperiodicityVerdict is_preperiodic_rational(const ChebyshevMap& map, const Rational& alpha) {
  PreperiodicityVerdict out;
  if (!alpha.is_integer()) {
    out.witness = orbit(map, alpha, 2);
    out.reason = "denominator " + alpha.den().get_str() + " is raised to the power " +
                 std::to_string(map.degree()) + " at every step";
    return out;
  }
  const auto& poly = map.polynomial();
  BigInt bound = 2;
  for (int i = 0; i < poly.degree(); ++i) bound += ::abs(poly.coeff(static_cast<std::size_t>(i)));

  std::map<Rational, std::size_t> seen;
  out.witness.iterates.push_back(alpha);
  seen.emplace(alpha, 0);
  while (true) {
    const Rational& z = out.witness.iterates.back();
    if (::abs(z.num()) >= bound) {
      out.witness.stop = OrbitStop::escaped;
      out.reason = "orbit reached |z| >= " + bound.get_str() + " and escapes monotonically";
      return out;
    }
    Rational next = map(z);
    out.witness.iterates.push_back(next);
    auto [it, inserted] = seen.emplace(next, out.witness.iterates.size() - 1);
    if (!inserted) {
      out.witness.stop = OrbitStop::repeated;
      out.witness.first_occurrence = it->second;
      out.preperiodic = true;
      out.reason = "orbit repeats";
      return out;
    }
  }
}

}  // namespace chebdyn
