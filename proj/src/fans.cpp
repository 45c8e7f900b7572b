#include "tubex/fans.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tubex {

namespace {

int cols_of(const Mat& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

// in-place row echelon; returns rank
int echelon(Mat& m) {
    int rows = static_cast<int>(m.size()), cols = cols_of(m);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

int mat_rank(Mat m) { return echelon(m); }

std::optional<Vec> solve_square(Mat a, Vec b) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    if (echelon(a) < n) return std::nullopt;
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

std::optional<Mat> invert(const Mat& a) {
    int n = static_cast<int>(a.size());
    Mat m(n, Vec(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    if (echelon(m) < n) return std::nullopt;
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j] / m[i][i];
    return inv;
}

std::optional<Vec> kernel_line(const Mat& rows, int n) {
    Mat m = rows;
    int rank = echelon(m);
    if (n - rank != 1) return std::nullopt;
    std::vector<int> pivot_of_col(n, -1);
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (m[i][c] == 0) ++c;
        pivot_of_col[c] = i;
    }
    int free_col = 0;
    while (pivot_of_col[free_col] >= 0) ++free_col;
    Vec v(n);
    v[free_col] = 1;
    for (int c = 0; c < n; ++c) {
        int i = pivot_of_col[c];
        if (i >= 0) v[c] = -m[i][free_col] / m[i][c];
    }
    return v;
}

std::optional<Vec> combination_in_span(const Mat& generators, const Vec& v) {
    int m = static_cast<int>(generators.size());
    int d = static_cast<int>(v.size());
    Mat aug(d, Vec(m + 1));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i) aug[i][j] = generators[j][i];
    for (int i = 0; i < d; ++i) aug[i][m] = v[i];
    echelon(aug);
    std::vector<int> pivot_of_col(m, -1);
    Vec lam(m, Rat(0));
    for (int i = 0; i < d; ++i) {
        int c = 0;
        while (c <= m && aug[i][c] == 0) ++c;
        if (c == m) return std::nullopt;   // 0 = nonzero: v outside the span
        if (c < m) pivot_of_col[c] = i;
    }
    for (int c = 0; c < m; ++c) {
        if (pivot_of_col[c] < 0)
            throw domain_error("combination_in_span: generators not linearly independent");
        int i = pivot_of_col[c];
        lam[c] = aug[i][m] / aug[i][c];
    }
    return lam;
}

Vec primitive(Vec v) {
    Int den = 1, num = 0;
    for (const Rat& q : v) den = boost::multiprecision::lcm(den, denominator(q));
    for (Rat& q : v) q *= den;
    for (const Rat& q : v) num = boost::multiprecision::gcd(num, numerator(q));
    if (num != 0)
        for (Rat& q : v) q /= num;
    return v;
}

FacialPreposet preposet_from_nested(const DeltaGraph& g, const Tubing& n) {
    if (!g.is_tubing(n)) throw input_error("preposet_from_nested: not a tubing");
    Tubing tb = n;
    std::sort(tb.begin(), tb.end(), canonical_less);
    tb.erase(std::unique(tb.begin(), tb.end()), tb.end());

    const GroundSet& gr = g.complex().ground();
    int m = gr.size();
    FacialPreposet q;
    q.ground = gr;
    q.rel.assign(m + 1, std::vector<bool>(m + 1, false));
    FaceSet support;
    for (const Tube& t : tb) support |= t;
    for (int i = 0; i <= m; ++i) q.rel[i][m] = true;   // everything ⪯ ∞
    for (int j = 0; j < m; ++j) {
        if (!support.contains(j)) {
            for (int i = 0; i <= m; ++i) q.rel[i][j] = true;   // no tube holds j
            continue;
        }
        for (int i = 0; i < m; ++i) {
            bool le = true;
            for (const Tube& t : tb)
                if (t.contains(j) && !t.contains(i)) { le = false; break; }
            q.rel[i][j] = le;
        }
    }
    q.rel[m][m] = true;

    // principal order ideals of the finite part must recover the tubing
    std::set<std::uint64_t> ideals, tubes;
    for (const Tube& t : tb) tubes.insert(t.bits);
    for (int j = 0; j < m; ++j) {
        if (!support.contains(j)) continue;
        FaceSet ideal;
        for (int i = 0; i < m; ++i)
            if (q.rel[i][j]) ideal |= FaceSet::single(i);
        ideals.insert(ideal.bits);
    }
    if (ideals != tubes)
        throw domain_error("preposet ideals do not recover the nested set");
    return q;
}

namespace {

void transitive_close(std::vector<std::vector<bool>>& rel) {
    int n = static_cast<int>(rel.size());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!rel[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (rel[k][j]) rel[i][j] = true;
        }
}

}  // namespace

bool is_contraction(const FacialPreposet& q1, const FacialPreposet& q2) {
    if (q1.ground.labels != q2.ground.labels)
        throw input_error("is_contraction: preposets on different grounds");
    int n = static_cast<int>(q1.rel.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q2.rel[i][j] && !q1.rel[i][j]) return false;
    // reverse the q2 relations lying inside q1 classes, close, and compare; any
    // valid R is contained in this one, and a smaller R closes to a smaller relation
    auto rel = q2.rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q2.rel[i][j] && q1.rel[i][j] && q1.rel[j][i]) rel[j][i] = true;
    transitive_close(rel);
    return rel == q1.rel;
}

FacialPreposet closure_union(const FacialPreposet& a, const FacialPreposet& b) {
    if (a.ground.labels != b.ground.labels)
        throw input_error("closure_union: preposets on different grounds");
    FacialPreposet q = a;
    int n = static_cast<int>(q.rel.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.rel[i][j]) q.rel[i][j] = true;
    transitive_close(q.rel);
    return q;
}

VectorAssignment standard_vectors(const DeltaGraph& g) {
    const GroundSet& gr = g.complex().ground();
    VectorAssignment va;
    std::vector<long> mags(gr.size());
    long dim = 0;
    for (int i = 0; i < gr.size(); ++i) {
        long v;
        try {
            v = std::stol(gr.labels[i]);
        } catch (const std::exception&) {
            throw input_error("standard vectors need signed integer labels, got " +
                              gr.labels[i]);
        }
        if (v == 0) throw input_error("standard vectors need nonzero labels");
        mags[i] = v;
        dim = std::max(dim, v >= 0 ? v : -v);
    }
    va.dim = static_cast<int>(dim);
    va.v.assign(gr.size(), Vec(dim, Rat(0)));
    for (int i = 0; i < gr.size(); ++i)
        va.v[i][(mags[i] >= 0 ? mags[i] : -mags[i]) - 1] = mags[i] >= 0 ? 1 : -1;
    return va;
}

namespace {

Vec tube_vector(const Tube& t, const VectorAssignment& va) {
    Vec v(va.dim, Rat(0));
    for (int i : t.elements())
        for (int c = 0; c < va.dim; ++c) v[c] += va.v[i][c];
    return v;
}

}  // namespace

ConeV cone_of_nested(const DeltaGraph& g, const Tubing& n, const VectorAssignment& va) {
    if (!g.is_tubing(n)) throw input_error("cone_of_nested: not a tubing");
    Tubing tb = n;
    std::sort(tb.begin(), tb.end(), canonical_less);
    tb.erase(std::unique(tb.begin(), tb.end()), tb.end());
    ConeV c;
    c.dim = va.dim;
    for (const Tube& t : tb) c.generators.push_back(tube_vector(t, va));
    if (mat_rank(c.generators) != static_cast<int>(c.generators.size()))
        throw domain_error("cone generators are linearly dependent");
    return c;
}

bool cone_contains(const ConeV& c, const Vec& x) {
    if (c.generators.empty()) {
        for (const Rat& q : x)
            if (q != 0) return false;
        return true;
    }
    auto lam = combination_in_span(c.generators, x);
    if (!lam) return false;
    for (const Rat& q : *lam)
        if (q < 0) return false;
    return true;
}

bool fan_pair_check(const DeltaGraph& g, const Tubing& n1, const Tubing& n2,
                    const VectorAssignment& va) {
    int n = va.dim;
    // halfspace description of each simplicial cone: rows of G⁻¹ (coords λ ≥ 0)
    Mat rows;
    for (const Tubing* nt : {&n1, &n2}) {
        ConeV c = cone_of_nested(g, *nt, va);
        if (static_cast<int>(c.generators.size()) != n)
            throw input_error("fan_pair_check needs full-dimensional simplicial cones");
        Mat gt(n, Vec(n));   // columns are the generators
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) gt[i][j] = c.generators[j][i];
        auto inv = invert(gt);
        if (!inv) throw input_error("fan_pair_check: degenerate cone");
        for (auto& r : *inv) rows.push_back(std::move(r));
    }

    // extreme rays of {x : rows·x ≥ 0} from (n−1)-subsets of the constraints
    auto satisfies = [&](const Vec& r) {
        for (const Vec& a : rows) {
            Rat s = 0;
            for (int i = 0; i < n; ++i) s += a[i] * r[i];
            if (s < 0) return false;
        }
        return true;
    };
    std::set<Vec> rays;
    int m = static_cast<int>(rows.size());
    auto try_subset = [&](const std::vector<int>& take) {
        Mat sub;
        for (int i : take) sub.push_back(rows[i]);
        auto ker = kernel_line(sub, n);
        if (!ker) return;
        Vec r = *ker;
        if (!satisfies(r)) {
            for (Rat& q : r) q = -q;
            if (!satisfies(r)) return;
        }
        // extremality: active constraints leave only this line
        Mat active;
        for (const Vec& a : rows) {
            Rat s = 0;
            for (int i = 0; i < n; ++i) s += a[i] * r[i];
            if (s == 0) active.push_back(a);
        }
        if (mat_rank(active) != n - 1) return;
        rays.insert(primitive(r));
    };
    std::vector<int> pick(std::max(n - 1, 0));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == n - 1) {
            try_subset(pick);
            return;
        }
        for (int i = start; i < m; ++i) {
            pick[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (n == 1)
        try_subset({});
    else
        rec(rec, 0, 0);

    std::set<Vec> expected;
    std::set<std::uint64_t> t2;
    for (const Tube& t : n2) t2.insert(t.bits);
    for (const Tube& t : n1)
        if (t2.count(t.bits)) expected.insert(primitive(tube_vector(t, va)));
    return rays == expected;
}

RealizedPolytope realize_standard_cut(const DeltaGraph& g) {
    const GroundSet& gr = g.complex().ground();
    for (int i = 0; i < gr.size(); ++i)
        if (gr.pairing[i] < 0)
            throw input_error("standard cut needs every vertex paired with its opposite");
    VectorAssignment va = standard_vectors(g);
    int n = va.dim;
    if (2 * n != gr.size())
        throw input_error("standard cut needs ground labels ±1..±n");

    RealizedPolytope p;
    p.dim = n;
    for (const Tube& t : g.tubes()) {
        long k = t.size();
        p.facets.push_back({t, tube_vector(t, va), Rat(k) * pow3(n - 1) - pow3(k - 2)});
    }
    auto maxt = g.maximal_tubings();
    for (const Tubing& tb : maxt) {
        if (static_cast<int>(tb.size()) != n)
            throw domain_error("maximal tubing has wrong size for a simple vertex");
        Mat a;
        Vec b;
        std::set<std::uint64_t> own;
        for (const Tube& t : tb) {
            a.push_back(tube_vector(t, va));
            b.push_back(Rat(static_cast<long>(t.size())) * pow3(n - 1) -
                        pow3(static_cast<long>(t.size()) - 2));
            own.insert(t.bits);
        }
        auto x = solve_square(a, b);
        if (!x)
            throw domain_error("realization failure: singular facet system at tubing " +
                               [&] {
                                   std::string s;
                                   for (const Tube& t : tb) s += gr.label_set(t);
                                   return s;
                               }());
        for (const Facet& f : p.facets) {
            Rat s = 0;
            for (int i = 0; i < n; ++i) s += f.normal[i] * (*x)[i];
            bool member = own.count(f.tube.bits) != 0;
            if (member ? (s != f.offset) : (s >= f.offset))
                throw domain_error("realization failure: vertex not simple at facet " +
                                   gr.label_set(f.tube));
        }
        p.vertices.push_back({tb, *x});
    }
    int v = static_cast<int>(p.vertices.size());
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            std::set<std::uint64_t> a;
            for (const Tube& t : p.vertices[i].tubing) a.insert(t.bits);
            int shared = 0;
            for (const Tube& t : p.vertices[j].tubing) shared += a.count(t.bits) ? 1 : 0;
            if (shared == n - 1) p.edges.emplace_back(i, j);
        }
    return p;
}

}  // namespace tubex
