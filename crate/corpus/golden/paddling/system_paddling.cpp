// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
// system paddling

#include <cca/runtime.h>

#include <cstdlib>

#include "PaddleGenerator_impl.h"
#include "fk_impl.h"

int main(int argc, char** argv) {
    using namespace amdsl_gen;
    const int steps = argc > 1 ? std::atoi(argv[1]) : 10;

    cca::Registry registry;

    auto& c_PaddleGenerator = registry.add<PaddleGeneratorImpl>("PaddleGenerator");
    // TODO deploy host ? [PaddleGenerator]
    // TODO deploy process ? [PaddleGenerator]
    // TODO deploy rate_hz ? [PaddleGenerator]

    auto& c_fk = registry.add<FkImpl>("fk");
    // TODO deploy host ? [fk]
    // TODO deploy process ? [fk]
    // TODO deploy rate_hz ? [fk]

    cca::connect(c_PaddleGenerator.out_u, c_fk.in, {cca::State::Execution, cca::State::OnlineLearning});

    registry.enter(cca::State::Init);
    for (int step = 0; step < steps; ++step) {
        registry.step(cca::State::OnlineLearning);
        registry.step(cca::State::Execution);
    }
    return 0;
}
