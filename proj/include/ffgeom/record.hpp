#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ffgeom/absval.hpp"

namespace ffgeom {

/// Stable key-value output lines: `key value ...`, one datum per line,
/// identical across runs and platforms for identical inputs.
inline void emit_record(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << ' ' << value << '\n';
}

inline void emit_record(std::ostream& out, const std::string& key, const AbsValue& v) {
    emit_record(out, key, v.str());
}

inline void emit_record(std::ostream& out, const std::string& key, bool v) {
    emit_record(out, key, std::string(v ? "true" : "false"));
}

inline void emit_record(std::ostream& out, const std::string& key, const std::vector<int>& v) {
    out << key;
    for (int e : v) out << ' ' << e;
    out << '\n';
}

}  // namespace ffgeom
