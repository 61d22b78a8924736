#include "aspectsim/models/safetensors.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/serialize.h>

namespace aspectsim::models {

namespace {

std::vector<char> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

torch::Dtype dtype_of(const std::string& name) {
  if (name == "F32") return torch::kFloat32;
  if (name == "F16") return torch::kFloat16;
  if (name == "BF16") return torch::kBFloat16;
  if (name == "F64") return torch::kFloat64;
  if (name == "I64") return torch::kInt64;
  if (name == "I32") return torch::kInt32;
  throw std::runtime_error("unsupported safetensors dtype " + name);
}

}  // namespace

std::map<std::string, torch::Tensor> load_safetensors(const std::filesystem::path& path) {
  const auto bytes = read_all(path);
  if (bytes.size() < 8) throw std::runtime_error(path.string() + ": truncated safetensors file");
  std::uint64_t header_len = 0;
  for (int i = 7; i >= 0; --i) header_len = (header_len << 8) | static_cast<unsigned char>(bytes[i]);
  if (header_len > bytes.size() - 8) throw std::runtime_error(path.string() + ": bad safetensors header length");
  const auto header = nlohmann::json::parse(bytes.begin() + 8, bytes.begin() + 8 + static_cast<std::ptrdiff_t>(header_len));
  const std::size_t data_start = 8 + header_len;

  std::map<std::string, torch::Tensor> out;
  for (const auto& [name, info] : header.items()) {
    if (name == "__metadata__") continue;
    const auto dtype = dtype_of(info.at("dtype").get<std::string>());
    std::vector<std::int64_t> shape = info.at("shape").get<std::vector<std::int64_t>>();
    const auto begin = info.at("data_offsets").at(0).get<std::size_t>();
    const auto end = info.at("data_offsets").at(1).get<std::size_t>();
    if (end < begin || data_start + end > bytes.size()) throw std::runtime_error(path.string() + ": bad offsets for " + name);
    std::int64_t numel = 1;
    for (auto d : shape) numel *= d;
    if (static_cast<std::size_t>(numel) * torch::elementSize(dtype) != end - begin) {
      throw std::runtime_error(path.string() + ": size mismatch for " + name);
    }
    auto t = torch::empty(shape, torch::TensorOptions().dtype(dtype));
    if (numel > 0) std::memcpy(t.data_ptr(), bytes.data() + data_start + begin, end - begin);
    if (t.is_floating_point() && dtype != torch::kFloat32) t = t.to(torch::kFloat32);
    out.emplace(name, t);
  }
  return out;
}

void save_safetensors(const std::filesystem::path& path, const std::map<std::string, torch::Tensor>& tensors) {
  nlohmann::ordered_json header = nlohmann::ordered_json::object();
  std::vector<torch::Tensor> payload;
  std::size_t offset = 0;
  for (const auto& [name, tensor] : tensors) {
    auto t = tensor.detach().to(torch::kCPU).contiguous();
    std::string dtype;
    if (t.scalar_type() == torch::kFloat32) {
      dtype = "F32";
    } else if (t.scalar_type() == torch::kInt64) {
      dtype = "I64";
    } else if (t.is_floating_point()) {
      t = t.to(torch::kFloat32);
      dtype = "F32";
    } else {
      t = t.to(torch::kInt64);
      dtype = "I64";
    }
    const std::size_t n = static_cast<std::size_t>(t.numel()) * t.element_size();
    header[name] = {{"dtype", dtype}, {"shape", t.sizes().vec()}, {"data_offsets", {offset, offset + n}}};
    offset += n;
    payload.push_back(t);
  }
  std::string h = header.dump();
  while ((8 + h.size()) % 8 != 0) h.push_back(' ');

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::uint64_t len = h.size();
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((len >> (8 * i)) & 0xFF));
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  for (const auto& t : payload) {
    out.write(static_cast<const char*>(t.data_ptr()), static_cast<std::streamsize>(t.numel() * t.element_size()));
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::map<std::string, torch::Tensor> load_torch_state_dict(const std::filesystem::path& path) {
  const auto bytes = read_all(path);
  auto value = torch::pickle_load(bytes);
  if (!value.isGenericDict()) throw std::runtime_error(path.string() + " does not hold a state dict");
  std::map<std::string, torch::Tensor> out;
  for (const auto& entry : value.toGenericDict()) {
    if (!entry.key().isString() || !entry.value().isTensor()) continue;
    auto t = entry.value().toTensor().contiguous();
    if (t.is_floating_point() && t.scalar_type() != torch::kFloat32) t = t.to(torch::kFloat32);
    out.emplace(entry.key().toStringRef(), t);
  }
  return out;
}

}  // namespace aspectsim::models
