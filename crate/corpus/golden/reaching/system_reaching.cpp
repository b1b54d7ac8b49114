// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
// system reaching

#include <cca/runtime.h>

#include <cstdlib>

#include "ReachController_impl.h"
#include "cam_to_base_impl.h"
#include "fk_tool_impl.h"
#include "ik_impl.h"

int main(int argc, char** argv) {
    using namespace amdsl_gen;
    const int steps = argc > 1 ? std::atoi(argv[1]) : 10;

    cca::Registry registry;

    auto& c_ReachController = registry.add<ReachControllerImpl>("ReachController");
    // TODO deploy host ? [ReachController]
    // TODO deploy process ? [ReachController]
    // TODO deploy rate_hz ? [ReachController]

    auto& c_cam_to_base = registry.add<Cam_to_baseImpl>("cam_to_base");
    // TODO deploy host ? [cam_to_base]
    // TODO deploy process ? [cam_to_base]
    // TODO deploy rate_hz ? [cam_to_base]

    auto& c_fk_tool = registry.add<Fk_toolImpl>("fk_tool");
    // TODO deploy host ? [fk_tool]
    // TODO deploy process ? [fk_tool]
    // TODO deploy rate_hz ? [fk_tool]

    auto& c_ik = registry.add<IkImpl>("ik");
    // TODO deploy host ? [ik]
    // TODO deploy process ? [ik]
    // TODO deploy rate_hz ? [ik]

    cca::connect(c_ik.out, c_ReachController.exec_q_ref, {cca::State::Execution});

    registry.enter(cca::State::Init);
    for (int step = 0; step < steps; ++step) {
        registry.step(cca::State::Execution);
    }
    return 0;
}
