#pragma once

#include <string>
#include <vector>

#include "hopf/catalog.hpp"
#include "hopf/yd.hpp"

namespace hopf {

// The HopfSpec text format: a line-oriented, '#'-commented description of
// Hopf algebras, functionals, R-matrices and YD (module) algebras over one
// field.  Sparse entry lines reference basis labels:
//
//   hopfspec 1
//   field rationals | field gf <p> | field ratfun
//
//   hopf <name>
//     dim <n>
//     basis <l1> ... <ln>
//     unit <label> <value>
//     counit <label> <value>
//     mult <i> <j> <k> <value>       # e_i e_j contains value * e_k
//     comult <k> <i> <j> <value>     # Delta(e_k) contains value * e_i (x) e_j
//     antipode <in> <out> <value>    # S(e_in) contains value * e_out
//   end
//
//   functional <name>      rmatrix <name>       ydmodule <name>
//     host <hopf-name>       host <hopf-name>     host <hopf-name>
//     arity <k>              entry <i> <j> <v>    dim <m> / basis ...
//     entry <l...> <v>                            action <h> <in> <out> <v>
//   end                                           coaction <in> <out> <h> <v>
//
//   ydalgebra <name>: as ydmodule plus  unit <label> <v>  and
//     mult <i> <j> <k> <v>  lines.
struct HopfSpecDoc {
  Field field = Field::rationals();

  struct HopfEntry {
    std::string name;
    HopfPtr algebra;
  };
  struct FunctionalEntry {
    std::string name, host;
    Functional value;
  };
  struct RMatrixEntry {
    std::string name, host;
    RMatrix value;
  };
  struct YDModuleEntry {
    std::string name, host;
    YDModule value;
  };
  struct YDAlgebraEntry {
    std::string name, host;
    YDAlgebra value;
  };

  std::vector<HopfEntry> hopfs;
  std::vector<FunctionalEntry> functionals;
  std::vector<RMatrixEntry> rmatrices;
  std::vector<YDModuleEntry> ydmodules;
  std::vector<YDAlgebraEntry> ydalgebras;

  const HopfEntry* find_hopf(const std::string& name) const;
  const FunctionalEntry* find_functional(const std::string& name) const;
};

HopfSpecDoc parse_hopfspec(const std::string& text);
std::string serialize_hopfspec(const HopfSpecDoc& doc);

// Parse one whitespace-free scalar literal (integers, fractions, t).
Scalar parse_scalar(const std::string& token, const Field& f, int line = 0, int col = 0);

}  // namespace hopf
