// GaitImpl: behaviour of component Gait.
// Written once by amdsl; never overwritten.
#include "Gait_impl.h"

namespace amdsl_gen {

void GaitImpl::onInit() {
}

void GaitImpl::onExecute() {
}

} // namespace amdsl_gen
