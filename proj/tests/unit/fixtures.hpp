#pragma once

#include <vector>

#include "asdim/action.hpp"
#include "asdim/covers.hpp"
#include "asdim/generate.hpp"

namespace asdim::test {

  inline SpacePtr p5() {
    return path_space(5);
  }

  inline SpacePtr c4() {
    return cycle_space(4);
  }

  // Z/2 acting on C4 by x -> x + 2.
  inline IsometricAction c4_antipodal() {
    return cycle_rotation(c4(), 2);
  }

  // Z/2 acting on P5 by x -> 4 - x.
  inline IsometricAction p5_reflection() {
    return path_reflection(p5());
  }

  inline Cover cover(SpacePtr const& m, std::vector<PointSet> members) {
    return Cover(m, std::move(members));
  }

  inline Scalar q(std::int64_t p, std::int64_t d = 1) {
    return Scalar(p, d);
  }

}  // namespace asdim::test
