// StancePhaseImpl: behaviour of component StancePhase.
// Written once by amdsl; never overwritten.
#include "StancePhase_impl.h"

namespace amdsl_gen {

void StancePhaseImpl::onInit() {
}

void StancePhaseImpl::onExecute() {
}

bool StancePhaseImpl::checkCriterion() {
    return false;
}

} // namespace amdsl_gen
