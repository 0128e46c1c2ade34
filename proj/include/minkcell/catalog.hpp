#pragma once

#include "minkcell/body.hpp"
#include "minkcell/rng.hpp"

namespace minkcell {
namespace catalog {

// Planar bodies.
SymmetricPolytope square();                         // [-1,1]^2
SymmetricPolytope regular_polygon(int m, double circumradius = 1.0);  // vertex at angle 0
SymmetricPolytope hexagon();                        // regular, circumradius 1

// The non-convergent family: conv{+-(1,1), +-(1,0), +-(1-1/i,-1)} and its
// Hausdorff limit, the square. The exact bisector of family member i for
// p=(0,0), q=(0,2) is the piecewise-linear graph returned by family_formula.
SymmetricPolytope family_body(int i);
SymmetricPolytope family_limit();  // == square()
double family_formula(int i, double x);  // bisector height y(x)

// The 3D discontinuity example: bicone over the unit disc with apex (1,0,1).
DiscBicone bicone_example();
// Polytopal stand-in: conv{+-apex, regular k-gon in z=0} as a facet list
// (k even). Carries the vertical edge [(1,0,0), apex].
SymmetricPolytope bicone_surrogate(int k = 16);

// nD test bodies.
SymmetricPolytope cube();        // [-1,1]^3
SymmetricPolytope octahedron();  // conv{+-e_i}, 8 facets

// Lattices.
Lattice cubic_lattice(int dim, double step);         // step * Z^n
Lattice hexagon_tiling_lattice();                    // exact tiling of hexagon()
Lattice disc_covering_lattice();                     // hexagonal, nearest dist sqrt(3)

// Random centrally symmetric polygon with exactly m vertices (m even >= 4),
// circumradius about 1. Rejection-samples half-vertices until the hull of
// the symmetrized set has m vertices.
SymmetricPolytope random_polygon(int m, Rng& rng);

// Frozen pre-build grid-search references for the benchmark table.
inline constexpr double kRefSquare = 1.0;
inline constexpr double kRefHexagon = 1.0;
inline constexpr double kRefOctagon = 1.1660;   // grid-search estimate
inline constexpr double kRef16gon = 1.1983;     // grid-search estimate
inline constexpr double kRef64gon = 1.2092;     // disc limit 2*pi/sqrt(27)

}  // namespace catalog
}  // namespace minkcell
