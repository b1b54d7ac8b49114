// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// Gait (Sequencer)
class GaitHull : public cca::Component {
public:
    explicit GaitHull(const char* name) : cca::Component(name) {}
    ~GaitHull() override = default;

    cca::In<cca::Port<EventFlag, 1>> done_StancePhase;
    cca::In<cca::Port<EventFlag, 1>> done_SwingPhase;
    cca::Out<cca::Port<EventFlag, 1>> done;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
