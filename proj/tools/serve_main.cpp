// iotforge-serve: remote analysis endpoint. Port from IOTFORGE_PORT
// (default 8470).
#include <cstdlib>
#include <iostream>
#include <string>

#include "iotforge/service.hpp"

int main() {
    int port = iotforge::AnalysisService::kDefaultPort;
    if (const char* env = std::getenv("IOTFORGE_PORT")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1 || value > 65535) {
            std::cerr << "error: IOTFORGE_PORT must be a port number, got '" << env << "'\n";
            return 2;
        }
        port = static_cast<int>(value);
    }
    iotforge::AnalysisService service;
    std::cout << "iotforge-serve listening on 0.0.0.0:" << port << "\n";
    if (!service.listen("0.0.0.0", port)) {
        std::cerr << "error: failed to bind port " << port << "\n";
        return 2;
    }
    return 0;
}
