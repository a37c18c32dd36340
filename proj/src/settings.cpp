#include "arbor/settings.hpp"

namespace arbor {

Settings& settings() {
    static Settings s;
    return s;
}

}  // namespace arbor
