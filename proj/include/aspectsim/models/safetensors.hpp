#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <torch/torch.h>

namespace aspectsim::models {

/// Reads every tensor of a .safetensors file (F32, F16, BF16, F64, I64, I32)
/// as a contiguous CPU tensor; floating tensors are converted to float32.
std::map<std::string, torch::Tensor> load_safetensors(const std::filesystem::path& path);

/// Writes float32 / int64 tensors in safetensors layout.
void save_safetensors(const std::filesystem::path& path, const std::map<std::string, torch::Tensor>& tensors);

/// A torch.save'd state dict (pytorch_model.bin, zip format).
std::map<std::string, torch::Tensor> load_torch_state_dict(const std::filesystem::path& path);

}  // namespace aspectsim::models
