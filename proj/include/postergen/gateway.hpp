#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "postergen/errors.hpp"

namespace postergen {

using json = nlohmann::json;

struct ChatImage {
    std::vector<std::uint8_t> bytes;
    std::string mime = "image/png";
};

struct ChatMessage {
    std::string role; // "system" | "user" | "assistant"
    std::string text;
    std::optional<ChatImage> image;
};

/// One chat/vision completion request. `agent` names the calling agent and
/// keys fixture lookups together with the content digest.
struct ChatRequest {
    std::string agent;
    std::vector<ChatMessage> messages;

    static ChatRequest user(std::string agent, std::string text) {
        ChatRequest req;
        req.agent = std::move(agent);
        req.messages.push_back({"user", std::move(text), std::nullopt});
        return req;
    }
};

enum class GatewayMode { fixture, live };

struct GatewayConfig {
    GatewayMode mode = GatewayMode::fixture;
    std::string endpoint_url = "https://api.openai.com/v1/chat/completions";
    std::string credential_env = "POSTERGEN_API_KEY";
    std::string model_id = "gpt-4.1-2025-04-14";
    double temperature = 0.7;
    int retry_budget = 2; // retries after the first attempt
    std::filesystem::path fixture_dir;

    void validate() const {
        if (temperature < 0.0 || temperature > 2.0)
            throw ConfigError("temperature must be in [0, 2]");
        if (retry_budget < 0) throw ConfigError("retry budget must be >= 0");
        if (mode == GatewayMode::fixture && fixture_dir.empty())
            throw ConfigError("fixture mode requires a fixture store path");
    }
};

inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t seed = 1469598103934665603ull) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

/// Stable digest over the agent role and message contents. Temperature and
/// model id are excluded so fixtures survive configuration changes; image
/// attachments contribute their content hash.
inline std::string request_digest(const ChatRequest& req) {
    std::uint64_t h = fnv1a64(req.agent.data(), req.agent.size());
    const char sep = '\x1f';
    for (const auto& msg : req.messages) {
        h = fnv1a64(&sep, 1, h);
        h = fnv1a64(msg.text.data(), msg.text.size(), h);
        if (msg.image) {
            const char img_sep = '\x1e';
            h = fnv1a64(&img_sep, 1, h);
            const std::uint64_t img = fnv1a64(msg.image->bytes.data(), msg.image->bytes.size());
            h = fnv1a64(&img, sizeof(img), h);
        }
    }
    return to_hex64(h);
}

/// Canned responses keyed by (agent role, attempt index, request digest).
/// Lookups are exact; a miss is an error and never falls through to a
/// live call.
class FixtureStore {
public:
    using Key = std::tuple<std::string, int, std::string>;

    void add(const std::string& role, int attempt, const std::string& digest,
             std::string response) {
        responses_[Key{role, attempt, digest}] = std::move(response);
    }

    const std::string* find(const std::string& role, int attempt,
                            const std::string& digest) const {
        auto it = responses_.find(Key{role, attempt, digest});
        return it == responses_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return responses_.size(); }

    /// Reads `index.txt` (role<TAB>attempt<TAB>digest<TAB>file) plus the
    /// referenced response files.
    static FixtureStore load(const std::filesystem::path& dir) {
        const auto index_path = dir / "index.txt";
        std::ifstream in(index_path);
        if (!in) throw ConfigError("fixture store missing index: " + index_path.string());
        FixtureStore store;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            std::istringstream fields(line);
            std::string role, attempt_str, digest, file;
            if (!std::getline(fields, role, '\t') || !std::getline(fields, attempt_str, '\t') ||
                !std::getline(fields, digest, '\t') || !std::getline(fields, file))
                throw ConfigError("fixture index line " + std::to_string(lineno) + " malformed");
            std::ifstream resp(dir / file, std::ios::binary);
            if (!resp)
                throw ConfigError("fixture file missing: " + (dir / file).string());
            std::ostringstream body;
            body << resp.rdbuf();
            store.add(role, std::stoi(attempt_str), digest, body.str());
        }
        return store;
    }

    /// Writes the store as an index plus one file per response, in sorted
    /// key order.
    void save(const std::filesystem::path& dir) const {
        std::filesystem::create_directories(dir);
        std::ofstream index(dir / "index.txt", std::ios::binary);
        if (!index) throw RenderError("cannot write fixture index under " + dir.string());
        int n = 0;
        for (const auto& [key, response] : responses_) {
            const auto& [role, attempt, digest] = key;
            char name[32];
            std::snprintf(name, sizeof(name), "resp_%04d.txt", n++);
            std::ofstream out(dir / name, std::ios::binary);
            out << response;
            index << role << '\t' << attempt << '\t' << digest << '\t' << name << '\n';
        }
    }

private:
    std::map<Key, std::string> responses_;
};

/// Registry of JSON response validators keyed by schema id. Validators
/// throw SchemaError with a message suitable for a corrective re-prompt.
class SchemaRegistry {
public:
    using Validator = std::function<void(const json&)>;

    static SchemaRegistry& instance() {
        static SchemaRegistry registry;
        return registry;
    }

    void add(const std::string& id, Validator v) { validators_[id] = std::move(v); }

    const Validator& get(const std::string& id) const {
        auto it = validators_.find(id);
        if (it == validators_.end()) throw ConfigError("unknown schema id: " + id);
        return it->second;
    }

private:
    std::map<std::string, Validator> validators_;
};

/// Removes a Markdown code fence wrapper if present, returning the body.
inline std::string strip_code_fence(const std::string& text) {
    auto trim = [](std::string s) {
        const auto* ws = " \t\r\n";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    std::string s = trim(text);
    if (s.rfind("```", 0) == 0) {
        const std::size_t nl = s.find('\n');
        if (nl == std::string::npos) return s;
        const std::size_t close = s.rfind("```");
        if (close > nl) return trim(s.substr(nl + 1, close - nl - 1));
    }
    return s;
}

/// Provider-agnostic chat completion front end with a fixture-replay mode
/// for fully offline runs. Live transport is injected (see
/// gateway_http.hpp) so the core stays network-free.
class LlmGateway {
public:
    using Transport = std::function<std::string(const ChatRequest&, const GatewayConfig&,
                                                const std::string& api_key)>;

    explicit LlmGateway(GatewayConfig config) : config_(std::move(config)) {
        config_.validate();
        if (config_.mode == GatewayMode::fixture)
            fixtures_ = FixtureStore::load(config_.fixture_dir);
    }

    LlmGateway(GatewayConfig config, FixtureStore fixtures)
        : config_(std::move(config)), fixtures_(std::move(fixtures)) {
        if (config_.mode != GatewayMode::fixture)
            throw ConfigError("an injected fixture store requires fixture mode");
    }

    const GatewayConfig& config() const { return config_; }

    void set_live_transport(Transport t) { transport_ = std::move(t); }

    /// Raw completion. In fixture mode returns the stored response for
    /// (role, attempt, digest); in live mode posts to the provider.
    std::string complete(const ChatRequest& req, int attempt = 0) const {
        if (req.messages.empty()) throw ValidationError("chat request has no messages");
        if (config_.mode == GatewayMode::fixture) {
            const std::string digest = request_digest(req);
            const std::string* response = fixtures_->find(req.agent, attempt, digest);
            if (!response)
                throw FixtureError("no fixture for role=" + req.agent + " attempt=" +
                                   std::to_string(attempt) + " digest=" + digest);
            return *response;
        }
        const char* key = std::getenv(config_.credential_env.c_str());
        if (!key || !*key)
            throw ConfigError("live mode requires credential in $" + config_.credential_env);
        if (!transport_)
            throw TransportError("live transport not configured");
        return transport_(req, config_, key);
    }

    /// Completion that must parse as JSON and satisfy the registered
    /// schema (plus an optional domain check). Invalid responses are
    /// re-prompted with the validation message appended, up to the retry
    /// budget; code fences are stripped before parsing.
    json complete_json(const ChatRequest& req, const std::string& schema_id,
                       const SchemaRegistry::Validator& domain_check = nullptr) const {
        const auto& schema = SchemaRegistry::instance().get(schema_id);
        ChatRequest attempt_req = req;
        std::string last_error;
        for (int attempt = 0; attempt <= config_.retry_budget; ++attempt) {
            const std::string text = complete(attempt_req, attempt);
            try {
                json parsed = json::parse(strip_code_fence(text));
                schema(parsed);
                if (domain_check) domain_check(parsed);
                return parsed;
            } catch (const json::parse_error& e) {
                last_error = std::string("response is not valid JSON: ") + e.what();
            } catch (const SchemaError& e) {
                last_error = e.what();
            } catch (const ValidationError& e) {
                last_error = e.what();
            }
            attempt_req.messages.push_back(
                {"user",
                 "Previous response rejected: " + last_error +
                     ". Reply again, following the required JSON structure exactly.",
                 std::nullopt});
        }
        throw SchemaError("schema '" + schema_id + "' validation failed after " +
                          std::to_string(config_.retry_budget + 1) + " attempts: " + last_error);
    }

private:
    GatewayConfig config_;
    std::optional<FixtureStore> fixtures_;
    Transport transport_;
};

} // namespace postergen
