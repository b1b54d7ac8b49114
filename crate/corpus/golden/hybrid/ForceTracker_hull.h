// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// ForceTracker (TrackingController)
class ForceTrackerHull : public cca::Component {
public:
    explicit ForceTrackerHull(const char* name) : cca::Component(name) {}
    ~ForceTrackerHull() override = default;

    cca::In<cca::Port<ForceTorque, 6>> exec_f_meas;
    cca::In<cca::Port<JointAngles, 7>> exec_q;
    cca::In<cca::Port<ForceTorque, 6>> learn_f_ref;
    cca::In<cca::Port<CartesianWrench, 6>> ref_wrench;
    cca::Out<cca::Port<CartesianWrench, 6>> out_wrench;

    void onInit() override = 0;
    void onExecute() override = 0;
    void onOnlineLearning() override = 0;
    void onOfflineLearning() override = 0;
};

} // namespace amdsl_gen
