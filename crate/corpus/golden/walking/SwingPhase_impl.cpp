// SwingPhaseImpl: behaviour of component SwingPhase.
// Written once by amdsl; never overwritten.
#include "SwingPhase_impl.h"

namespace amdsl_gen {

void SwingPhaseImpl::onInit() {
}

void SwingPhaseImpl::onExecute() {
}

void SwingPhaseImpl::onOfflineLearning() {
}

bool SwingPhaseImpl::checkCriterion() {
    return false;
}

} // namespace amdsl_gen
