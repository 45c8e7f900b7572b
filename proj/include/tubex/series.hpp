#pragma once

#include <map>
#include <string>
#include <vector>

#include "tubex/numeric.hpp"

namespace tubex {

// truncated bivariate power series over exact rationals; coeff(k, n) is the
// coefficient of (first var)^k (second var)^n, k ≤ kmax, n ≤ nmax.
// Binary operations shrink mismatched truncations to the common window.
class BivariateSeries {
   public:
    BivariateSeries(int kmax, int nmax)
        : kmax_(check_dim(kmax)), nmax_(check_dim(nmax)),
          c_(static_cast<std::size_t>(kmax + 1) * (nmax + 1)) {}

    static BivariateSeries constant(const Rat& v, int kmax, int nmax) {
        BivariateSeries s(kmax, nmax);
        s.at(0, 0) = v;
        return s;
    }
    static BivariateSeries monomial(const Rat& v, int k, int n, int kmax, int nmax) {
        BivariateSeries s(kmax, nmax);
        s.at(k, n) = v;
        return s;
    }

    int kmax() const { return kmax_; }
    int nmax() const { return nmax_; }

    const Rat& at(int k, int n) const {
        check_range(k, n);
        return c_[static_cast<std::size_t>(k) * (nmax_ + 1) + n];
    }
    Rat& at(int k, int n) {
        check_range(k, n);
        return c_[static_cast<std::size_t>(k) * (nmax_ + 1) + n];
    }

    BivariateSeries truncated(int kmax, int nmax) const;
    std::vector<Rat> row(int n) const;  // coefficients k = 0..kmax at fixed n

    bool operator==(const BivariateSeries&) const = default;

   private:
    int kmax_, nmax_;
    std::vector<Rat> c_;

    static int check_dim(int d) {
        if (d < 0 || d > 256) throw input_error("series truncation out of range");
        return d;
    }
    void check_range(int k, int n) const {
        if (k < 0 || n < 0 || k > kmax_ || n > nmax_)
            throw input_error("series coefficient index out of window");
    }
};

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries scale(const BivariateSeries& a, const Rat& c);

// formal partials; the top order of the respective axis becomes undetermined
// and the truncation shrinks by one (clamped at zero for a constant window)
BivariateSeries d_s(const BivariateSeries& a);
BivariateSeries d_t(const BivariateSeries& a);

// r(n) = polynomial in n plus point masses δ(n−i); closed under + and ·
struct WeightFunction {
    std::vector<Rat> poly;       // poly[i] = coefficient of n^i
    std::map<int, Rat> deltas;   // i ↦ coefficient of δ(n−i)

    static WeightFunction polynomial(std::vector<Rat> coeffs);
    static WeightFunction delta(int i);
    Rat eval(int n) const;
    WeightFunction operator+(const WeightFunction& o) const;
    WeightFunction operator*(const WeightFunction& o) const;
};

enum class Axis { k, n };

// coeff(k, n) ← r(axis index) · coeff(k, n)
BivariateSeries apply_weight(const BivariateSeries& a, const WeightFunction& r,
                             Axis on);

// multiplicative inverse; zero constant term → domain_error
BivariateSeries inverse(const BivariateSeries& a);
// Newton square root; constant term must be the square of a positive rational
BivariateSeries sqrt(const BivariateSeries& a);

enum class DualDirection { to_complex, to_polyhedron };

// mirror coeff(k, n) ↔ coeff(n−k, n); involution. Needs a square window and
// a triangular support (nonzero above the diagonal → domain_error)
BivariateSeries dual_transform(const BivariateSeries& a, DualDirection dir);

// the named family generating functions, exact on the requested window
// (internally widened where a closed form divides by the second variable);
// tags as in families.hpp plus "empty"
BivariateSeries family_series(const std::string& family, int kmax, int nmax);

// the four mutually recursive series solved together as fixed points,
// plus the single-path series they are built from
struct FamilyFixedPoints {
    BivariateSeries fA, fM, fD, fT, fC;
};
FamilyFixedPoints solve_family_fixed_points(int kmax, int nmax);

// conjectured closed forms, kept separate from family_series because the
// checks report rather than assert: axes (k, n) = (s, t) resp. (x, y)
BivariateSeries pell_conjecture_series(int kmax, int nmax);
BivariateSeries wand_conjecture_series(int kmax, int nmax);

}  // namespace tubex
