// Ft_to_wrenchImpl: behaviour of component ft_to_wrench.
// Written once by amdsl; never overwritten.
#include "ft_to_wrench_impl.h"

namespace amdsl_gen {

void Ft_to_wrenchImpl::onInit() {
}

void Ft_to_wrenchImpl::onExecute() {
}

} // namespace amdsl_gen
