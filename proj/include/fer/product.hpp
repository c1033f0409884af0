#pragma once

#include "fer/image.hpp"

namespace fer {

// Pixel-scaled product: out = round(face * saliency), saliency in [0, 1].
// Attenuates non-salient regions; never brightens. Rounds half up so a
// saliency map of all ones reproduces the face exactly. Dimensions must match.
GrayImage scaled_product(const GrayImage& face, const SaliencyMap& saliency);

// Optional post-step (off by default): stretch a product image back to the
// full [0, 255] range. A constant image is returned unchanged.
GrayImage renormalize_gray(const GrayImage& img);

}  // namespace fer
