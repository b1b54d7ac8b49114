// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// StancePhase (PatternGenerator)
class StancePhaseHull : public cca::Component {
public:
    explicit StancePhaseHull(const char* name) : cca::Component(name) {}
    ~StancePhaseHull() override = default;

    cca::In<cca::Port<Phase, 1>> exec_phase;
    cca::In<cca::Port<Scalar, 1>> param_shape;
    cca::Out<cca::Port<EventFlag, 1>> done;
    cca::Out<cca::Port<JointAngles, 12>> out_q_stance;

    void onInit() override = 0;
    void onExecute() override = 0;
    bool checkCriterion() override = 0;
};

} // namespace amdsl_gen
