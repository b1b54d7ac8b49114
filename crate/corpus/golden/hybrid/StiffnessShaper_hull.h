// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// StiffnessShaper (Generic)
class StiffnessShaperHull : public cca::Component {
public:
    explicit StiffnessShaperHull(const char* name) : cca::Component(name) {}
    ~StiffnessShaperHull() override = default;

    cca::In<cca::Port<JointAngles, 7>> learn_q;
    cca::In<cca::Port<JointAngles, 7>> param_goal;
    cca::Out<cca::Port<EventFlag, 1>> done;
    cca::Out<cca::Port<JointImpedance, 7>> out_k;

    void onInit() override = 0;
    void onExecute() override = 0;
    void onOfflineLearning() override = 0;
    bool checkCriterion() override = 0;
};

} // namespace amdsl_gen
