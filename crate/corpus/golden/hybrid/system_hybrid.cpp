// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
// system hybrid

#include <cca/runtime.h>

#include <cstdlib>

#include "ForceTracker_impl.h"
#include "StiffnessShaper_impl.h"
#include "ft_to_wrench_impl.h"
#include "jac_impl.h"

int main(int argc, char** argv) {
    using namespace amdsl_gen;
    const int steps = argc > 1 ? std::atoi(argv[1]) : 10;

    cca::Registry registry;

    auto& c_ForceTracker = registry.add<ForceTrackerImpl>("ForceTracker");
    // TODO deploy host ? [ForceTracker]
    // TODO deploy process ? [ForceTracker]
    // TODO deploy rate_hz ? [ForceTracker]

    auto& c_StiffnessShaper = registry.add<StiffnessShaperImpl>("StiffnessShaper");
    // TODO deploy host ? [StiffnessShaper]
    // TODO deploy process ? [StiffnessShaper]
    // TODO deploy rate_hz ? [StiffnessShaper]

    auto& c_ft_to_wrench = registry.add<Ft_to_wrenchImpl>("ft_to_wrench");
    // TODO deploy host ? [ft_to_wrench]
    // TODO deploy process ? [ft_to_wrench]
    // TODO deploy rate_hz ? [ft_to_wrench]

    auto& c_jac = registry.add<JacImpl>("jac");
    // TODO deploy host ? [jac]
    // TODO deploy process ? [jac]
    // TODO deploy rate_hz ? [jac]

    cca::connect(c_ForceTracker.out_wrench, c_jac.in, {cca::State::Execution, cca::State::OnlineLearning, cca::State::OfflineLearning});

    registry.enter(cca::State::Init);
    registry.enter(cca::State::OfflineLearning);
    for (int step = 0; step < steps; ++step) {
        registry.step(cca::State::OnlineLearning);
        registry.step(cca::State::Execution);
    }
    return 0;
}
