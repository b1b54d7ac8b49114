// PaddleGeneratorImpl: behaviour of component PaddleGenerator.
// Written once by amdsl; never overwritten.
#include "PaddleGenerator_impl.h"

namespace amdsl_gen {

void PaddleGeneratorImpl::onInit() {
}

void PaddleGeneratorImpl::onExecute() {
}

void PaddleGeneratorImpl::onOnlineLearning() {
}

} // namespace amdsl_gen
