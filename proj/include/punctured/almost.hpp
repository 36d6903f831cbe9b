#pragma once

// Operator presentations of almost modules over k[x,y].
//
// M_g on the grid basis e_{ij}, for g = 1 + sum lambda_{ij} x^-i y^-j in G:
//   Phi_x(e_{ij}) = e_{i+1,j} - sum_{l=1}^{j} lambda_{i+1,l} e_{0,j-l},  Phi_y(e_{ij}) = e_{i,j+1}
// N_h on the sequence basis e_i, for h = sum_{j<=d} mu_j y^j:
//   Psi_x(e_i) = sum_{j=-i}^{d} mu_j e_{i+j},  Psi_y(e_i) = e_{i+1}

#include <string>
#include <vector>

#include <punctured/linalg.hpp>
#include <punctured/rank.hpp>
#include <punctured/series.hpp>

namespace punctured {

struct Relation {
    std::string lhs, rhs;
    RankCertificate certificate; // rank of lhs - rhs
};

struct AlmostModulePresentation {
    Field field;
    BasisScheme scheme;
    // Window on which every relation is certified.
    int window = 0;
    std::vector<std::pair<std::string, WindowedOperator>> generators;
    // The commutator [x, y] = 0 relation.
    std::vector<Relation> relations;
    // rho(1) - id, always rank 0.
    RankCertificate unit;

    const WindowedOperator &generator(const std::string &name) const;
};

// Needs g known to total degree window + 2 (precision >= window + 3).
AlmostModulePresentation build_M_g(const BiSeries &g, int window);
// Needs h known to precision >= window + 2 (exponents down to -(window + 1)).
AlmostModulePresentation build_N_h(const TruncatedSeries &h, int window);

struct GradedPiece {
    int degree = 0;
    int dim_source = 0, dim_middle = 0, dim_target = 0; // k[x,y]_{D-1}, V_D, W_D
    int rank_iota = 0, rank_pi = 0;
    bool composite_zero = false;
    bool exact = false;
};

struct IntertwiningDefect {
    std::string map;       // "iota" or "pi"
    std::string generator; // "x" or "y"
    RankCertificate certificate;
};

struct SesReport {
    int window = 0;
    BiSeries g; // 1 - x^-1 h
    std::vector<GradedPiece> pieces;
    std::vector<IntertwiningDefect> defects;
    bool exact = false;
    bool defects_bounded = false; // every defect rank <= 1 and stable
    bool passed = false;
};

// 0 -> k[x,y] -> V -> W -> 0 with x^i y^j -> e_{i+1,j} and e_{0j} -> e_j,
// checked against M_{1 - x^-1 h} and N_h. h must have no polynomial part.
SesReport verify_ses(const TruncatedSeries &h, int window);

// f(h, y) for f in k[x,y]; the second variable of f must be h's variable.
// PrecisionExhausted when the result is known to less than `required`.
TruncatedSeries char_phi_h(const TruncatedSeries &h, const Polynomial &f, int required = 0);

} // namespace punctured

namespace punctured {

// Experimental, asserts nothing: compares the commutator of M_{g g'} with the
// sum of the commutators of M_g and M_{g'}. The difference lies in span{e_00}
// and is nonzero exactly where the cross term of (g - 1)(g' - 1) is.
struct GroupLawExperiment {
    RankCertificate product, first, second, difference;
};
GroupLawExperiment group_law_experiment(const BiSeries &g1, const BiSeries &g2, int window);

} // namespace punctured
