// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
// system walking

#include <cca/runtime.h>

#include <cstdlib>

#include "Gait_impl.h"
#include "StancePhase_impl.h"
#include "SwingPhase_impl.h"
#include "foot_fk_impl.h"

int main(int argc, char** argv) {
    using namespace amdsl_gen;
    const int steps = argc > 1 ? std::atoi(argv[1]) : 10;

    cca::Registry registry;

    auto& c_Gait = registry.add<GaitImpl>("Gait");
    // TODO deploy host ? [Gait]
    // TODO deploy process ? [Gait]
    // TODO deploy rate_hz ? [Gait]

    auto& c_StancePhase = registry.add<StancePhaseImpl>("StancePhase");
    // TODO deploy host ? [StancePhase]
    // TODO deploy process ? [StancePhase]
    // TODO deploy rate_hz ? [StancePhase]

    auto& c_SwingPhase = registry.add<SwingPhaseImpl>("SwingPhase");
    // TODO deploy host ? [SwingPhase]
    // TODO deploy process ? [SwingPhase]
    // TODO deploy rate_hz ? [SwingPhase]

    auto& c_foot_fk = registry.add<Foot_fkImpl>("foot_fk");
    // TODO deploy host ? [foot_fk]
    // TODO deploy process ? [foot_fk]
    // TODO deploy rate_hz ? [foot_fk]

    cca::connect(c_StancePhase.done, c_Gait.done_StancePhase, {cca::State::Execution});
    cca::connect(c_SwingPhase.done, c_Gait.done_SwingPhase, {cca::State::Execution});
    cca::connect(c_SwingPhase.out_q_swing, c_foot_fk.in, {cca::State::Execution, cca::State::OfflineLearning});

    registry.enter(cca::State::Init);
    registry.enter(cca::State::OfflineLearning);
    for (int step = 0; step < steps; ++step) {
        registry.step(cca::State::Execution);
    }
    return 0;
}
