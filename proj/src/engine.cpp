#include "liegrowth/engine.hpp"

namespace liegrowth {

template struct DensePoly<Fp61>;
template struct DensePoly<QField>;
template class RowSpace<Fp61>;
template class RowSpace<QField>;
template struct Components<Fp61>;
template struct Components<QField>;

template DensePoly<Fp61> to_dense<Fp61>(const WordTable&, const NcPoly&, long);
template DensePoly<QField> to_dense<QField>(const WordTable&, const NcPoly&, long);
template DensePoly<Fp61> bracket_dense<Fp61>(const WordTable&, const DensePoly<Fp61>&, const DensePoly<Fp61>&);
template DensePoly<QField> bracket_dense<QField>(const WordTable&, const DensePoly<QField>&,
                                                 const DensePoly<QField>&);
template Components<Fp61> closure_components<Fp61>(const WordTable&, const std::vector<DensePoly<Fp61>>&,
                                                   const std::vector<DensePoly<Fp61>>&, long);
template Components<QField> closure_components<QField>(const WordTable&, const std::vector<DensePoly<QField>>&,
                                                       const std::vector<DensePoly<QField>>&, long);
template std::vector<DensePoly<Fp61>> minimal_generators<Fp61>(const WordTable&, const Components<Fp61>&, long);
template std::vector<DensePoly<QField>> minimal_generators<QField>(const WordTable&, const Components<QField>&,
                                                                   long);

}  // namespace liegrowth
