// ForceTrackerImpl: behaviour of component ForceTracker.
// Written once by amdsl; never overwritten.
#include "ForceTracker_impl.h"

namespace amdsl_gen {

void ForceTrackerImpl::onInit() {
}

void ForceTrackerImpl::onExecute() {
}

void ForceTrackerImpl::onOnlineLearning() {
}

void ForceTrackerImpl::onOfflineLearning() {
}

} // namespace amdsl_gen
