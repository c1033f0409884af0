#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "fer/dataset.hpp"
#include "fer/face.hpp"
#include "fer/image.hpp"

namespace fer {

// Deterministic stand-in data for the licensed CFEE/RaFD datasets: stylised
// frontal faces with per-emotion mouth/brow geometry and per-gaze pupil
// offsets, drawn so the bundled cascade detects them reliably.

struct FaceFixture {
    Image image;
    FaceBox face;  // ground-truth face rectangle
};

struct FaceFixtureOptions {
    int canvas_w = 320;
    int canvas_h = 320;
    Emotion emotion = Emotion::Neutral;
    std::optional<Gaze> gaze;
};

FaceFixture make_face_fixture(const FaceFixtureOptions& options, std::mt19937_64& rng);

// Two faces with distinct sizes in one canvas; .face is the larger.
struct TwoFaceFixture {
    Image image;
    FaceBox larger;
    FaceBox smaller;
};
TwoFaceFixture make_two_face_fixture(std::mt19937_64& rng);

// Writes <root>/<Emotion>/<subject>[_gaze].png plus a .fer_synthetic marker.
// kind "cfee": one image per (subject, emotion), subjects "S001"...
// kind "rafd": one image per (subject, emotion, gaze), subjects "s001"...
// Returns the number of images written.
int write_synthetic_dataset(const std::filesystem::path& root, const std::string& kind,
                            int subjects, std::uint64_t seed);

// 256x256 training images for desk-scale tests.
// Class images carry a per-emotion bright patch over seeded noise (learnable);
// noise images carry no class signal at all (chance-level material).
GrayImage make_class_image(Emotion emotion, std::uint64_t seed);
GrayImage make_noise_image(std::uint64_t seed);

}  // namespace fer
