#pragma once

#include <string>
#include <vector>

#include "logchern/arrangement.hpp"
#include "logchern/numeric.hpp"

namespace logchern {

// Named built-in arrangements:
//   triangle                three lines of P^2 seen from a general point
//   generic_lines(d)        d lines in general position
//   dual_hesse_conic        the 11-section arrangement cut out by the conic
//                           through five triple points of the dual Hesse
//                           line arrangement
//   tangent_quad(e)         four sections pairwise tangent of order e over
//                           three fibers (combinatorial, not realizable over
//                           the complex numbers for e >= 2)
//   frobenius_triangle(p,r) triangle in characteristic p pulled back through
//                           r Frobenius twists (r defaults to 1)
ArrangementSpec builtin(const std::string& name);

std::vector<std::string> builtin_names();

// --- height inequality checker -------------------------------------------

struct HeightInput {
    int g = 2;              // genus of the generic fiber, >= 2
    int delta = 0;          // number of singular fibers
    Rat omega_sq = 0;       // self-intersection of the relative dualizing sheaf
    Rat d_P = 0;            // geometric log discriminant of the point
    Rat h_K = 0;            // geometric height of the point
};

struct HeightResult {
    bool holds;        // h_K < (2g-1)(d_P + delta) - omega^2, strictly
    Rat lhs;
    Rat rhs;
    bool inconsistent; // rhs <= 0: no non-isotrivial semi-stable family fits
};

HeightResult height_check(const HeightInput& in);

// --- de Bruijn–Erdos checker ----------------------------------------------

struct IncidenceStructure {
    int lines = 0;   // s
    int points = 0;  // r
    std::vector<bool> incidence;  // lines x points, row-major

    bool incident(int line, int point) const {
        return incidence[static_cast<std::size_t>(line) * points + point];
    }
    void set(int line, int point) {
        incidence[static_cast<std::size_t>(line) * points + point] = true;
    }
    static IncidenceStructure make(int lines, int points) {
        IncidenceStructure s;
        s.lines = lines;
        s.points = points;
        s.incidence.assign(static_cast<std::size_t>(lines) * points, false);
        return s;
    }
};

struct DeBruijnErdosResult {
    bool r_ge_s;
    int r;
    int s;
    bool equality;
};

DeBruijnErdosResult de_bruijn_erdos(const IncidenceStructure& inc);

// incidence of d lines in general position: C(d,2) double points
IncidenceStructure generic_lines_incidence(int d);
// the seven-line finite projective plane
IncidenceStructure fano_incidence();
// s-1 concurrent lines plus one transversal line
IncidenceStructure near_pencil_incidence(int s);

}  // namespace logchern
