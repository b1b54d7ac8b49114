// IkImpl: behaviour of component ik.
// Written once by amdsl; never overwritten.
#include "ik_impl.h"

namespace amdsl_gen {

void IkImpl::onInit() {
}

void IkImpl::onExecute() {
}

} // namespace amdsl_gen
