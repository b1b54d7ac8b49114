// FkImpl: behaviour of component fk.
// Written once by amdsl; never overwritten.
#include "fk_impl.h"

namespace amdsl_gen {

void FkImpl::onInit() {
}

void FkImpl::onExecute() {
}

} // namespace amdsl_gen
