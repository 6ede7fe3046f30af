#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace relbench {

enum class LogLevel { Silent = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

/// Threshold from RELBENCH_LOG (silent|error|warn|info|debug), default info.
inline LogLevel log_threshold() {
    static const LogLevel level = [] {
        const char* env = std::getenv("RELBENCH_LOG");
        if (env == nullptr) return LogLevel::Info;
        const std::string v(env);
        if (v == "silent" || v == "off" || v == "0") return LogLevel::Silent;
        if (v == "error") return LogLevel::Error;
        if (v == "warn") return LogLevel::Warn;
        if (v == "debug") return LogLevel::Debug;
        return LogLevel::Info;
    }();
    return level;
}

inline void log_line(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(log_threshold())) return;
    const char* tag = "info";
    switch (level) {
        case LogLevel::Error: tag = "error"; break;
        case LogLevel::Warn: tag = "warn"; break;
        case LogLevel::Debug: tag = "debug"; break;
        default: break;
    }
    std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void log_error(const std::string& msg) { log_line(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log_line(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log_line(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_line(LogLevel::Debug, msg); }

}  // namespace relbench
