#ifndef RELPROP_MODEL_IO_HPP
#define RELPROP_MODEL_IO_HPP

#include <string>
#include <vector>

#include "relprop/ensemble.hpp"
#include "relprop/logic.hpp"
#include "relprop/miner.hpp"

namespace relprop {

/// Everything needed to classify new facts files: the bias, the class-name
/// table, the mined features, and the fitted ensemble.
struct ModelFile {
    std::vector<std::string> class_names;
    std::vector<BiasDecl> bias;
    FeatureSet features;
    Ensemble ensemble;
};

/// Text serialization at full precision: log-priors and conditionals are
/// written with 17 significant digits, so a round-trip reproduces every
/// member model bit-for-bit (derived tables are recomputed from the
/// conditionals with the fitting expressions).
std::string write_model(const ModelFile& model);
ModelFile read_model(const std::string& text);

}  // namespace relprop

#endif
