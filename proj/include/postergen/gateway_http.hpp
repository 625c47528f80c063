#pragma once

// Live chat-completions transport over cpp-httplib. Kept out of
// gateway.hpp so offline builds and tests never pull in the HTTP stack;
// HTTPS endpoints additionally need CPPHTTPLIB_OPENSSL_SUPPORT.

#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "postergen/gateway.hpp"

namespace postergen {

namespace detail {

inline std::string base64_encode(const std::uint8_t* data, std::size_t size) {
    static const char* alphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((size + 2) / 3 * 4);
    for (std::size_t i = 0; i < size; i += 3) {
        std::uint32_t chunk = data[i] << 16;
        if (i + 1 < size) chunk |= data[i + 1] << 8;
        if (i + 2 < size) chunk |= data[i + 2];
        out += alphabet[(chunk >> 18) & 0x3F];
        out += alphabet[(chunk >> 12) & 0x3F];
        out += i + 1 < size ? alphabet[(chunk >> 6) & 0x3F] : '=';
        out += i + 2 < size ? alphabet[chunk & 0x3F] : '=';
    }
    return out;
}

struct ParsedUrl {
    std::string origin; // scheme://host[:port]
    std::string path;
};

inline ParsedUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ConfigError("endpoint url missing scheme: " + url);
    const auto path_begin = url.find('/', scheme_end + 3);
    if (path_begin == std::string::npos) return {url, "/"};
    return {url.substr(0, path_begin), url.substr(path_begin)};
}

} // namespace detail

/// OpenAI-style chat-completions transport. Text messages map directly;
/// image attachments become base64 data-URL content parts.
inline LlmGateway::Transport make_chat_completions_transport() {
    return [](const ChatRequest& req, const GatewayConfig& cfg,
              const std::string& api_key) -> std::string {
        json body;
        body["model"] = cfg.model_id;
        body["temperature"] = cfg.temperature;
        body["messages"] = json::array();
        for (const auto& msg : req.messages) {
            json m;
            m["role"] = msg.role;
            if (msg.image) {
                json parts = json::array();
                parts.push_back({{"type", "text"}, {"text", msg.text}});
                parts.push_back(
                    {{"type", "image_url"},
                     {"image_url",
                      {{"url", "data:" + msg.image->mime + ";base64," +
                                   detail::base64_encode(msg.image->bytes.data(),
                                                         msg.image->bytes.size())}}}});
                m["content"] = parts;
            } else {
                m["content"] = msg.text;
            }
            body["messages"].push_back(m);
        }

        const auto url = detail::split_url(cfg.endpoint_url);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
        if (url.origin.rfind("https://", 0) == 0)
            throw TransportError("HTTPS endpoint requires a TLS-enabled build");
#endif
        httplib::Client client(url.origin);
        client.set_read_timeout(120, 0);
        httplib::Headers headers{{"Authorization", "Bearer " + api_key}};
        auto res = client.Post(url.path, headers, body.dump(), "application/json");
        if (!res)
            throw TransportError("request to " + cfg.endpoint_url + " failed: " +
                                 httplib::to_string(res.error()));
        if (res->status != 200)
            throw TransportError("provider returned HTTP " + std::to_string(res->status) +
                                 ": " + res->body);
        try {
            json parsed = json::parse(res->body);
            return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception& e) {
            throw TransportError(std::string("malformed provider response: ") + e.what());
        }
    };
}

} // namespace postergen
