// JacImpl: behaviour of component jac.
// Written once by amdsl; never overwritten.
#include "jac_impl.h"

namespace amdsl_gen {

void JacImpl::onInit() {
}

void JacImpl::onExecute() {
}

} // namespace amdsl_gen
