// Cam_to_baseImpl: behaviour of component cam_to_base.
// Written once by amdsl; never overwritten.
#include "cam_to_base_impl.h"

namespace amdsl_gen {

void Cam_to_baseImpl::onInit() {
}

void Cam_to_baseImpl::onExecute() {
}

} // namespace amdsl_gen
