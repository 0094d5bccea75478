#include "lck/vaisman.hpp"

namespace lck {

PhiTensor phi_tensor(const HermitianStructure& h, const LeeData<Rational>& lee) {
  PhiTensor out;
  out.matrix = phi_matrix(h, lee);
  return out;
}

}  // namespace lck
