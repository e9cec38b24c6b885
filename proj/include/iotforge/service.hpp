#pragma once

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace iotforge {

/// HTTP adapter over the api facade. Stateless: every request parses its
/// own model, so concurrent requests never share mutable state.
///
///   POST /v1/validate | /v1/generate | /v1/analyze   {"model_text": "..."}
///   GET  /v1/health
///
/// Request bodies are capped at 1 MiB.
class AnalysisService {
  public:
    AnalysisService();
    ~AnalysisService();

    /// Blocks serving requests until stop().
    bool listen(const std::string& host, int port);

    /// Binds an ephemeral port and returns it, for in-process tests; serve
    /// with listen_after_bind() on another thread.
    int bind_any_port(const std::string& host);
    bool listen_after_bind();

    void stop();
    bool is_running() const;

    static constexpr int kDefaultPort = 8470;
    static constexpr std::size_t kMaxBodyBytes = 1 << 20;

  private:
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace iotforge
