#pragma once

#include "ew/model.hpp"

#include <map>
#include <memory>

// Models are built once per test binary.
inline const ew::TypeModel& model_of(ew::TypeTag t) {
    static std::map<ew::TypeTag, std::unique_ptr<ew::TypeModel>> cache;
    auto& slot = cache[t];
    if (!slot) slot = std::make_unique<ew::TypeModel>(ew::build_model(t, ew::default_data_dir()));
    return *slot;
}
