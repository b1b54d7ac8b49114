// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// ReachController (TrackingController)
class ReachControllerHull : public cca::Component {
public:
    explicit ReachControllerHull(const char* name) : cca::Component(name) {}
    ~ReachControllerHull() override = default;

    cca::In<cca::Port<JointAngles, 6>> exec_q;
    cca::In<cca::Port<JointAngles, 6>> exec_q_ref;
    cca::In<cca::Port<JointTorques, 6>> ref_tau;
    cca::Out<cca::Port<JointTorques, 6>> out_tau;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
