#pragma once

#include <spdlog/spdlog.h>

namespace listcolor {

/// Diagnostic logger on stderr. LISTCOLOR_LOG selects the level
/// (trace, debug, info, warn, error, off); default is warn.
spdlog::logger & log();

}
