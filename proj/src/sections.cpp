#include "fueter/sections.hpp"

namespace fueter {

std::string space_name(Space s) {
    switch (s) {
        case Space::V0: return "V0";
        case Space::V1: return "V1";
        case Space::V2: return "V2";
    }
    return "?";
}

int component_count(Space s, const ComplexParams& params) {
    switch (s) {
        case Space::V0: return params.dim_v0();
        case Space::V1: return params.dim_v1();
        case Space::V2: return params.dim_v2();
    }
    return 0;
}

}  // namespace fueter
