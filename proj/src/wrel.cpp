#include "dlcat/wrel.hpp"

namespace dlc::rel {

// Instantiate the common operators once so header mistakes surface here.
template WeightedMatrix<NonNegRational> deriving(const BaseSet&, const Truncation&);
template WeightedMatrix<Boolean> deriving(const BaseSet&, const Truncation&);
template Reconstruction<NonNegRational> reconstruct_from_unit(const BaseSet&, const Truncation&,
                                                              const WeightedMatrix<NonNegRational>&);
template Reconstruction<Boolean> reconstruct_from_unit(const BaseSet&, const Truncation&,
                                                       const WeightedMatrix<Boolean>&);
template WeightedMatrix<NonNegRational> bang_map(const WeightedMatrix<NonNegRational>&, const Truncation&);
template Seely<NonNegRational> seely(const BaseSet&, const BaseSet&, const Truncation&);
template Comonoid<NonNegRational> comonoid(const BaseSet&, const Truncation&);

}  // namespace dlc::rel
