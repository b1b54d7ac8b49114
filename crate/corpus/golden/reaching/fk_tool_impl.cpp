// Fk_toolImpl: behaviour of component fk_tool.
// Written once by amdsl; never overwritten.
#include "fk_tool_impl.h"

namespace amdsl_gen {

void Fk_toolImpl::onInit() {
}

void Fk_toolImpl::onExecute() {
}

} // namespace amdsl_gen
