// Foot_fkImpl: behaviour of component foot_fk.
// Written once by amdsl; never overwritten.
#include "foot_fk_impl.h"

namespace amdsl_gen {

void Foot_fkImpl::onInit() {
}

void Foot_fkImpl::onExecute() {
}

} // namespace amdsl_gen
