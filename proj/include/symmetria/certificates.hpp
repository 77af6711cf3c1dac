#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symmetria/qsqrt2.hpp"

namespace symmetria {

// ---------------------------------------------------------------------------
// Axial symmetry program (exact arithmetic in Q[sqrt(2)])
// ---------------------------------------------------------------------------

// A named assignment to the variables of the axial symmetry program. The six
// areas are the parts of the body inside the points of the six-pointed star
// around an inscribed axially regular hexagon of unit area; t is their total.
struct AxialProgramPoint {
    QSqrt2 lambda, a, b, c, d, e, f, t;
};

// Names of violated constraints; empty means feasible. All checks are exact.
std::vector<std::string> axial_primal_feasible(const AxialProgramPoint& x);

struct DualPoint {
    QSqrt2 y1, y2, y3, y4, y5;
};

// Exact feasibility of the dual of the binding-case linear program, with t
// treated as a parameter.
bool dual_feasible_case3(const QSqrt2& t, const DualPoint& y);
std::vector<std::string> dual_violations_case3(const QSqrt2& t, const DualPoint& y);

QSqrt2 dual_objective_case3(const QSqrt2& t, const DualPoint& y);

// The two dual certificates used to pin the optimum, as functions of t.
DualPoint dual_certificate_plain(const QSqrt2& t);     // (0,0,0,1,0)/(1+t)
DualPoint dual_certificate_weighted(const QSqrt2& t);  // (4,2,2,4,1)/(5(1+t))

struct CertificateCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct AxialityBoundCertificate {
    QSqrt2 value;          // (2/41)(10 + 3 sqrt 2)
    QSqrt2 crossing_t;     // (6 - 3 sqrt 2)/4
    QSqrt2 case1_value;    // (9 sqrt 2 - 2)/15
    QSqrt2 case2_value;    // 3/4
    std::vector<CertificateCheck> checks;
};

// Verifies, in exact arithmetic, the dual certificates and case analysis that
// pin the universal axiality lower bound, and returns the exact value.
// Throws InternalInconsistency if any identity fails.
AxialityBoundCertificate certified_axiality_lower_bound();

// ---------------------------------------------------------------------------
// Folding symmetry program (floating point; bilinear constraints)
// ---------------------------------------------------------------------------

struct FoldingProgramPoint {
    double lambda = 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0, t = 0.0;
    double u = 0.0;
    double m1 = 0.0, m2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double alpha = 1.0, beta = -1.0;
    double phi_b = 0.0, phi_e = 0.0;
    double k1 = 0.0, k2 = 0.0;
    double y1 = 0.5, y2 = 0.5;
};

enum class FoldingVariant { standard, obtuse };

// Residual (amount of violation, 0 when satisfied) of every constraint of the
// folding symmetry program, including the max/min definitions.
std::vector<std::pair<std::string, double>> folding_program_residuals(
    const FoldingProgramPoint& x, FoldingVariant variant);

double max_residual(const std::vector<std::pair<std::string, double>>& residuals);

struct FoldingSearchResult {
    double min_lambda = 1.0;
    FoldingProgramPoint witness;
    FoldingVariant variant = FoldingVariant::standard;
    long long samples = 0;
};

// Random sampling plus local descent over feasible points of both program
// variants. The result is an upper bound on the program optimum, not a proof.
FoldingSearchResult folding_program_search(long long budget, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

// max{k!, (n-k)!} / (2^(n-k) n!)
Rational lower_bound_general(int n, int k);

// Central symmetry of the regular n-simplex:
// (n+1)^-n * sum_{i=0}^{floor(n/2)} (-1)^i C(n+1, i) (n+1-2i)^n
Rational simplex_central_symmetry(int n);

// 1/(2n), the general bound specialized to hyperplane reflections.
Rational lower_bound_hyperplane(int n);

// (2 - 2^(-1/n))^(-n), the pyramid step in the dimension recursion.
double pyramid_step_bound(int n);

// Exact comparison lower_bound_hyperplane(n) > simplex_central_symmetry(n).
bool separation_check(int n);

}  // namespace symmetria
