// StiffnessShaperImpl: behaviour of component StiffnessShaper.
// Written once by amdsl; never overwritten.
#include "StiffnessShaper_impl.h"

namespace amdsl_gen {

void StiffnessShaperImpl::onInit() {
}

void StiffnessShaperImpl::onExecute() {
}

void StiffnessShaperImpl::onOfflineLearning() {
}

bool StiffnessShaperImpl::checkCriterion() {
    return false;
}

} // namespace amdsl_gen
