"""Example usage of gem_degree: build gems, read invariants, compute degrees."""

from gem_degree import (
    build_g_d_product,
    certify_sphere,
    compose,
    cylinder_gem,
    euler_characteristic,
    glued_sphere,
    map_degree,
    necklace_sphere,
    orientation_reversal,
    product_gem,
    reduce_cylinder,
    regular_genus,
    sphere_map_of_degree,
)

# ============================================================================
# Example 1: Gems and their invariants
# ============================================================================
print("=== Example 1: Gems and their invariants ===")

# product_gem(n, d) represents Sⁿ⁻¹×S¹ with 2d(n+1) facets
gem = product_gem(3, 4)
print(f"product_gem(3, 4): {gem.vertex_count} vertices")
print(f"Euler characteristic: {euler_characteristic(gem)}")

report = regular_genus(gem, workers=2)
print(f"regular genus: {report.regular_genus} at ε = {report.argmin.order}")

# ============================================================================
# Example 2: Degree of a simplicial map
# ============================================================================
print("\n=== Example 2: Degree of a simplicial map ===")

# g_d: product_gem(n, d) -> product_standard(n) wraps the circle d times
g4 = build_g_d_product(3, 4)
result = map_degree(g4)
print(f"deg g_4 = {result.degree}, per target: {set(result.per_target.values())}")

# Composing with the column swap reverses orientation
reversed_g4 = compose(orientation_reversal(g4.target), g4)
print(f"deg g' ∘ g_4 = {map_degree(reversed_g4).degree}")

# Sphere maps: the source is enlarged by n-dipoles when d exceeds V/2
m = sphere_map_of_degree(necklace_sphere(2, 2), 5)
print(f"sphere map: {m.source.vertex_count} facets -> degree {map_degree(m).degree}")

# ============================================================================
# Example 3: Reduction and sphere recognition
# ============================================================================
print("\n=== Example 3: Reduction and sphere recognition ===")

reduced, log = reduce_cylinder(cylinder_gem(3, 3))
for entry in log:
    print(f"{entry['kind']:<14} color {entry['color']} -> {entry['vertices_after']} vertices")

certificate = certify_sphere(glued_sphere(4, 2))
print(f"glued_sphere(4, 2) is a sphere: {bool(certificate)}")
