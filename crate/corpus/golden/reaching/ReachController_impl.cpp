// ReachControllerImpl: behaviour of component ReachController.
// Written once by amdsl; never overwritten.
#include "ReachController_impl.h"

namespace amdsl_gen {

void ReachControllerImpl::onInit() {
}

void ReachControllerImpl::onExecute() {
}

} // namespace amdsl_gen
