#pragma once

#include <iostream>
#include <sstream>
#include <string>

namespace ctpp::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

inline Level& threshold() {
    static Level lv = Level::Info;
    return lv;
}

inline const char* level_tag(Level lv) {
    switch (lv) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
    }
    return "?";
}

inline void append_kv(std::ostringstream&) {}

template <typename V, typename... Rest>
void append_kv(std::ostringstream& line, const char* key, const V& value,
               Rest&&... rest) {
    line << ' ' << key << '=' << value;
    append_kv(line, rest...);
}

// Line-oriented key=value records on stderr:  level=info event=... k=v ...
template <typename... KV>
void emit(Level lv, const char* event, KV&&... kv) {
    if (lv < threshold()) return;
    std::ostringstream line;
    line << "level=" << level_tag(lv) << " event=" << event;
    append_kv(line, kv...);
    std::cerr << line.str() << '\n';
}

template <typename... KV>
void info(const char* event, KV&&... kv) {
    emit(Level::Info, event, kv...);
}

template <typename... KV>
void warn(const char* event, KV&&... kv) {
    emit(Level::Warn, event, kv...);
}

template <typename... KV>
void debug(const char* event, KV&&... kv) {
    emit(Level::Debug, event, kv...);
}

}  // namespace ctpp::log
