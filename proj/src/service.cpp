// HTTP wiring only; all model work happens behind iotforge/api.hpp.
#include "iotforge/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "iotforge/api.hpp"

namespace iotforge {

namespace {

void reply_json(httplib::Response& res, int status, const std::string& body) {
    res.status = status;
    res.set_content(body, "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message) {
    nlohmann::ordered_json body;
    body["status"] = "error";
    body["message"] = message;
    reply_json(res, status, body.dump(2) + "\n");
}

void handle_operation(const httplib::Request& req, httplib::Response& res,
                      const std::string& operation_name) {
    auto operation = parse_operation(operation_name);
    if (!operation) {
        reply_error(res, 400, "unknown operation '" + operation_name + "'");
        return;
    }
    nlohmann::json request_body = nlohmann::json::parse(req.body, nullptr, false);
    if (request_body.is_discarded() || !request_body.is_object()) {
        reply_error(res, 400, "request body must be a JSON object");
        return;
    }
    if (!request_body.contains("model_text") || !request_body["model_text"].is_string()) {
        reply_error(res, 400, "missing string field 'model_text'");
        return;
    }
    std::string model_text = request_body["model_text"].get<std::string>();
    if (model_text.empty()) {
        reply_error(res, 400, "'model_text' must be non-empty");
        return;
    }
    ApiOutcome outcome = run_operation(model_text, *operation);
    reply_json(res, 200, outcome_body_json(outcome));
}

}  // namespace

AnalysisService::AnalysisService() : server_(std::make_unique<httplib::Server>()) {
    server_->set_payload_max_length(kMaxBodyBytes);

    server_->Get("/v1/health", [](const httplib::Request&, httplib::Response& res) {
        reply_json(res, 200, "{\"status\":\"ok\"}\n");
    });
    server_->Post(R"(/v1/(\w+))", [](const httplib::Request& req, httplib::Response& res) {
        try {
            handle_operation(req, res, req.matches[1].str());
        } catch (const std::exception& e) {
            // Opaque to the client; details stay server-side.
            reply_error(res, 500, "internal error");
        }
    });
}

AnalysisService::~AnalysisService() { stop(); }

bool AnalysisService::listen(const std::string& host, int port) {
    return server_->listen(host, port);
}

int AnalysisService::bind_any_port(const std::string& host) {
    return server_->bind_to_any_port(host);
}

bool AnalysisService::listen_after_bind() { return server_->listen_after_bind(); }

void AnalysisService::stop() {
    if (server_ && server_->is_running()) server_->stop();
}

bool AnalysisService::is_running() const { return server_ && server_->is_running(); }

}  // namespace iotforge
