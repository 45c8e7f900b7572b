#include "tubex/series.hpp"

#include <algorithm>

namespace tubex {

namespace {

std::pair<int, int> common(const BivariateSeries& a, const BivariateSeries& b) {
    return {std::min(a.kmax(), b.kmax()), std::min(a.nmax(), b.nmax())};
}

Rat rat_sqrt(const Rat& c) {
    if (c <= 0) throw domain_error("square root of a non-positive constant term");
    Int n = numerator(c), d = denominator(c);
    Int rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d)
        throw domain_error("constant term is not the square of a rational");
    return Rat(rn, rd);
}

}  // namespace

BivariateSeries BivariateSeries::truncated(int kmax, int nmax) const {
    if (kmax > kmax_ || nmax > nmax_)
        throw input_error("cannot widen a truncated series");
    BivariateSeries out(kmax, nmax);
    for (int k = 0; k <= kmax; ++k)
        for (int n = 0; n <= nmax; ++n) out.at(k, n) = at(k, n);
    return out;
}

std::vector<Rat> BivariateSeries::row(int n) const {
    std::vector<Rat> out;
    for (int k = 0; k <= kmax_; ++k) out.push_back(at(k, n));
    return out;
}

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
    auto [K, N] = common(a, b);
    BivariateSeries out(K, N);
    for (int k = 0; k <= K; ++k)
        for (int n = 0; n <= N; ++n) out.at(k, n) = a.at(k, n) + b.at(k, n);
    return out;
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
    auto [K, N] = common(a, b);
    BivariateSeries out(K, N);
    for (int k = 0; k <= K; ++k)
        for (int n = 0; n <= N; ++n) out.at(k, n) = a.at(k, n) - b.at(k, n);
    return out;
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
    auto [K, N] = common(a, b);
    BivariateSeries out(K, N);
    for (int i = 0; i <= std::min(K, a.kmax()); ++i)
        for (int j = 0; j <= std::min(N, a.nmax()); ++j) {
            const Rat& av = a.at(i, j);
            if (av == 0) continue;
            for (int p = 0; i + p <= K; ++p)
                for (int q = 0; j + q <= N; ++q) {
                    const Rat& bv = b.at(p, q);
                    if (bv != 0) out.at(i + p, j + q) += av * bv;
                }
        }
    return out;
}

BivariateSeries scale(const BivariateSeries& a, const Rat& c) {
    BivariateSeries out(a.kmax(), a.nmax());
    for (int k = 0; k <= a.kmax(); ++k)
        for (int n = 0; n <= a.nmax(); ++n) out.at(k, n) = a.at(k, n) * c;
    return out;
}

BivariateSeries d_s(const BivariateSeries& a) {
    int K = std::max(a.kmax() - 1, 0);
    BivariateSeries out(K, a.nmax());
    for (int k = 0; k + 1 <= a.kmax() && k <= K; ++k)
        for (int n = 0; n <= a.nmax(); ++n) out.at(k, n) = a.at(k + 1, n) * (k + 1);
    return out;
}

BivariateSeries d_t(const BivariateSeries& a) {
    int N = std::max(a.nmax() - 1, 0);
    BivariateSeries out(a.kmax(), N);
    for (int k = 0; k <= a.kmax(); ++k)
        for (int n = 0; n + 1 <= a.nmax() && n <= N; ++n)
            out.at(k, n) = a.at(k, n + 1) * (n + 1);
    return out;
}

WeightFunction WeightFunction::polynomial(std::vector<Rat> coeffs) {
    WeightFunction w;
    w.poly = std::move(coeffs);
    return w;
}

WeightFunction WeightFunction::delta(int i) {
    if (i < 0) throw input_error("delta weight at negative index");
    WeightFunction w;
    w.deltas[i] = 1;
    return w;
}

namespace {
Rat poly_eval(const std::vector<Rat>& poly, int n) {
    Rat v = 0, p = 1;
    for (const Rat& c : poly) {
        v += c * p;
        p *= n;
    }
    return v;
}
}  // namespace

Rat WeightFunction::eval(int n) const {
    Rat v = poly_eval(poly, n);
    auto it = deltas.find(n);
    if (it != deltas.end()) v += it->second;
    return v;
}

WeightFunction WeightFunction::operator+(const WeightFunction& o) const {
    WeightFunction w = *this;
    if (o.poly.size() > w.poly.size()) w.poly.resize(o.poly.size(), 0);
    for (std::size_t i = 0; i < o.poly.size(); ++i) w.poly[i] += o.poly[i];
    for (auto& [i, c] : o.deltas) w.deltas[i] += c;
    return w;
}

WeightFunction WeightFunction::operator*(const WeightFunction& o) const {
    WeightFunction w;
    if (!poly.empty() && !o.poly.empty()) {
        w.poly.assign(poly.size() + o.poly.size() - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < o.poly.size(); ++j)
                w.poly[i + j] += poly[i] * o.poly[j];
    }
    // δ(n−i)·r(n) = r(i)·δ(n−i), and δ(n−i)·δ(n−i) = δ(n−i)
    for (auto& [i, c] : deltas) w.deltas[i] += c * o.eval(i);
    for (auto& [j, c] : o.deltas) w.deltas[j] += c * poly_eval(poly, j);
    for (auto it = w.deltas.begin(); it != w.deltas.end();)
        it = (it->second == 0) ? w.deltas.erase(it) : std::next(it);
    return w;
}

BivariateSeries apply_weight(const BivariateSeries& a, const WeightFunction& r,
                             Axis on) {
    BivariateSeries out(a.kmax(), a.nmax());
    for (int k = 0; k <= a.kmax(); ++k)
        for (int n = 0; n <= a.nmax(); ++n)
            out.at(k, n) = a.at(k, n) * r.eval(on == Axis::k ? k : n);
    return out;
}

BivariateSeries inverse(const BivariateSeries& a) {
    if (a.at(0, 0) == 0) throw domain_error("inverse of a series with zero constant");
    int K = a.kmax(), N = a.nmax();
    BivariateSeries out(K, N);
    Rat c0 = a.at(0, 0);
    // triangular recurrence in increasing total degree
    for (int d = 0; d <= K + N; ++d)
        for (int k = std::max(0, d - N); k <= std::min(d, K); ++k) {
            int n = d - k;
            Rat acc = (k == 0 && n == 0) ? Rat(1) : Rat(0);
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == 0 && j == 0) continue;
                    const Rat& av = a.at(i, j);
                    if (av != 0) acc -= av * out.at(k - i, n - j);
                }
            out.at(k, n) = acc / c0;
        }
    return out;
}

BivariateSeries sqrt(const BivariateSeries& a) {
    Rat r0 = rat_sqrt(a.at(0, 0));
    BivariateSeries s = BivariateSeries::constant(r0, a.kmax(), a.nmax());
    // Newton: s ← (s + a/s)/2 doubles the correct total order each pass
    for (int it = 0; it < a.kmax() + a.nmax() + 2; ++it) {
        BivariateSeries next = scale(add(s, mul(a, inverse(s))), Rat(1, 2));
        if (next == s) return s;
        s = std::move(next);
    }
    throw domain_error("square root iteration failed to stabilize");
}

BivariateSeries dual_transform(const BivariateSeries& a, DualDirection) {
    if (a.kmax() != a.nmax())
        throw input_error("dual transform needs a square truncation window");
    for (int k = 0; k <= a.kmax(); ++k)
        for (int n = 0; n < k; ++n)
            if (a.at(k, n) != 0)
                throw domain_error("coefficient outside the triangular support");
    BivariateSeries out(a.kmax(), a.nmax());
    for (int n = 0; n <= a.nmax(); ++n)
        for (int k = 0; k <= n; ++k) out.at(k, n) = a.at(n - k, n);
    return out;
}

namespace {

BivariateSeries one_series(int K, int N) {  // 1
    return BivariateSeries::constant(1, K, N);
}
BivariateSeries X(int K, int N) { return BivariateSeries::monomial(1, 1, 0, K, N); }
BivariateSeries Y(int K, int N) { return BivariateSeries::monomial(1, 0, 1, K, N); }
BivariateSeries XY(int K, int N) { return BivariateSeries::monomial(1, 1, 1, K, N); }

BivariateSeries theta(const BivariateSeries& a) {  // y·d/dy without shrink
    return apply_weight(a, WeightFunction::polynomial({0, 1}), Axis::n);
}

// −(√(x²y²−2(x+2)y+1) + (x+2)y − 1) / (2(x+1)y²); the division by y² is a
// two-column shift, so the radicand is expanded two orders wider to keep the
// requested window exact
BivariateSeries f_assoc(int K, int N) {
    int NW = N + 2;
    BivariateSeries one = one_series(K, NW);
    BivariateSeries x2y = mul(add(X(K, NW), BivariateSeries::constant(2, K, NW)),
                              Y(K, NW));
    BivariateSeries xy = XY(K, NW);
    BivariateSeries rad = add(sub(mul(xy, xy), scale(x2y, 2)), one);
    BivariateSeries num = sub(sub(one, sqrt(rad)), x2y);
    BivariateSeries sh(K, N);
    for (int k = 0; k <= K; ++k) {
        if (num.at(k, 0) != 0 || num.at(k, 1) != 0)
            throw domain_error("associahedron numerator not divisible by y^2");
        for (int n = 0; n <= N; ++n) sh.at(k, n) = num.at(k, n + 2);
    }
    BivariateSeries den = add(one_series(K, N), X(K, N));
    return scale(mul(sh, inverse(den)), Rat(1, 2));
}

// 1/√(x²y²−2xy−4y+1)
BivariateSeries f_cyclo(int K, int N) {
    BivariateSeries xy = XY(K, N);
    BivariateSeries rad = add(sub(sub(mul(xy, xy), scale(xy, 2)), scale(Y(K, N), 4)),
                              one_series(K, N));
    return inverse(sqrt(rad));
}

// (1+(2+x)y) / (2√(1−2(2+x)y+x²y²)) + 1/2
BivariateSeries f_halo(int K, int N) {
    BivariateSeries one = one_series(K, N);
    BivariateSeries x2y = mul(add(X(K, N), BivariateSeries::constant(2, K, N)),
                              Y(K, N));
    BivariateSeries xy = XY(K, N);
    BivariateSeries rad = add(sub(one, scale(x2y, 2)), mul(xy, xy));
    BivariateSeries h = mul(add(one, x2y), inverse(sqrt(rad)));
    return add(scale(h, Rat(1, 2)), BivariateSeries::constant(Rat(1, 2), K, N));
}

// ((1−xy)−2y) / ((1−xy)²−4y)
BivariateSeries f_tc(int K, int N) {
    BivariateSeries one_xy = sub(one_series(K, N), XY(K, N));
    return mul(sub(one_xy, scale(Y(K, N), 2)),
               inverse(sub(mul(one_xy, one_xy), scale(Y(K, N), 4))));
}

// 1/(1−(2+x)y)
BivariateSeries f_empty(int K, int N) {
    BivariateSeries x2y = mul(add(X(K, N), BivariateSeries::constant(2, K, N)),
                              Y(K, N));
    return inverse(sub(one_series(K, N), x2y));
}

}  // namespace

FamilyFixedPoints solve_family_fixed_points(int K, int N) {
    BivariateSeries fA = f_assoc(K, N);
    BivariateSeries one = one_series(K, N), xy = XY(K, N), y = Y(K, N);
    BivariateSeries fM = one, fD = one, fT = one, fC = one;
    // each pass fixes one more order in the second variable
    for (int it = 0; it <= N + 1; ++it) {
        BivariateSeries nM = add(add(one, mul(xy, fD)), mul(y, mul(fA, fM)));
        BivariateSeries nD = add(add(one, mul(xy, fD)), scale(mul(y, mul(fA, fM)), 2));
        BivariateSeries nT = add(add(one, mul(xy, fM)), mul(y, mul(fA, sub(fC, one))));
        BivariateSeries nC = add(add(one, mul(xy, fM)), mul(y, mul(fA, fT)));
        bool stable = nM == fM && nD == fD && nT == fT && nC == fC;
        fM = std::move(nM);
        fD = std::move(nD);
        fT = std::move(nT);
        fC = std::move(nC);
        if (stable) return {std::move(fA), std::move(fM), std::move(fD),
                            std::move(fT), std::move(fC)};
    }
    throw domain_error("family fixed-point iteration failed to stabilize");
}

BivariateSeries family_series(const std::string& family, int K, int N) {
    if (family == "path_plus") return f_assoc(K, N);
    if (family == "double_path") return f_cyclo(K, N);
    if (family == "cycle_plus") return f_halo(K, N);
    if (family == "twisted_cycle") return f_tc(K, N);
    if (family == "empty") return f_empty(K, N);
    if (family == "missing_vertex_double_path") return solve_family_fixed_points(K, N).fM;
    if (family == "trans_double_path") return solve_family_fixed_points(K, N).fT;
    if (family == "cis_double_path") return solve_family_fixed_points(K, N).fC;
    if (family == "near_double_path") {
        auto fp = solve_family_fixed_points(K, N);
        BivariateSeries one = one_series(K, N);
        return add(add(one, mul(XY(K, N), fp.fD)),
                   scale(mul(Y(K, N), mul(fp.fA, fp.fM)), 2));
    }
    if (family == "twisted_path") {
        auto fp = solve_family_fixed_points(K, N);
        // arcs through the seam contribute with multiplicity, giving the
        // weight (2 + y d/dy) on the single-path factor
        BivariateSeries op = add(scale(fp.fA, 2), theta(fp.fA));
        return add(fp.fT, mul(Y(K, N), mul(op, fp.fT)));
    }
    if (family == "double_cycle") {
        auto fp = solve_family_fixed_points(K, N);
        BivariateSeries fB = f_cyclo(K, N);
        BivariateSeries one = one_series(K, N);
        BivariateSeries op = add(scale(fp.fA, 2), scale(theta(fp.fA), 2));
        return add(add(one, mul(XY(K, N), fB)),
                   mul(Y(K, N), add(mul(op, sub(fp.fC, one)), scale(fB, 2))));
    }
    throw input_error("no closed-form series for family: " + family);
}

BivariateSeries pell_conjecture_series(int K, int N) {
    // Q/(Q−s) with Q = 1 − 2st − s²t − s²t²; axes (k, n) = (s, t)
    BivariateSeries q = one_series(K, N);
    q = sub(q, BivariateSeries::monomial(2, 1, 1, K, N));
    q = sub(q, BivariateSeries::monomial(1, 2, 1, K, N));
    q = sub(q, BivariateSeries::monomial(1, 2, 2, K, N));
    return mul(q, inverse(sub(q, X(K, N))));
}

BivariateSeries wand_conjecture_series(int K, int N) {
    // 2/(1+√(1−4y)−2x); axes (k, n) = (x, y)
    BivariateSeries den = sub(add(one_series(K, N),
                                  sqrt(sub(one_series(K, N), scale(Y(K, N), 4)))),
                              scale(X(K, N), 2));
    return scale(inverse(den), 2);
}

}  // namespace tubex
