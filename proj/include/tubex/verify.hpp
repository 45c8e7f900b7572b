#pragma once

#include <string>
#include <vector>

#include "tubex/delta_graph.hpp"

namespace tubex {

// one structural identity checked against brute force; fail carries a witness
// reproducible from (id, params) alone
struct CheckReport {
    std::string id;
    std::string params;
    std::string status;    // pass | fail | conjecture-match | conjecture-mismatch | skipped
    std::string witness;   // offending tube / tubing / coefficient on failure
    long long ms = 0;
    long assertions = 0;
};

// Σ over tubing-complex vertices of link f-polynomials equals d/ds of the
// tubing f-polynomial
CheckReport check_atomic_link_sum(const std::string& family, int n_max);

// documented kingmaker set per n, plus the assembled bivariate recursion
// compared coefficient-wise with the family's generating function
CheckReport check_kingmaker_family(const std::string& family, int n_max);

// link factorization for every tube, plus tube-shape censuses and complement
// families where the family has a documented classification
CheckReport check_facet_closure(const std::string& family, int n_max);

// all 3-dimensional hypercube graphs up to signed relabeling: which have the
// cyclohedron f-vector, and which are face-poset isomorphic to it
CheckReport check_isomorphism_search();

// face-poset isomorphism of two tubing complexes (refinement + backtracking)
bool tubing_complex_isomorphic(const DeltaGraph& a, const DeltaGraph& b);

// conjectured generating function for Pell tubing f-polynomials (never hard-fails)
CheckReport check_pell_conjecture(int n_max);
// conjectured EGF for wand maximal tubing counts; emits the full diff table
CheckReport check_wand_conjecture(int j_max, int k_max);
// skeleton/sash-lattice comparison awaits an external oracle; always skipped
CheckReport check_sash_skeleton();

// families with a documented kingmaker set
std::vector<std::string> kingmaker_families();
// ids in canonical order
std::vector<std::string> verify_catalog();
// run every check at the given bound; order canonicalized by (id, params)
std::vector<CheckReport> run_all(int n_max, int threads = 0);
bool any_hard_failure(const std::vector<CheckReport>& reports);

}  // namespace tubex
