use pants_browser::{coamoeba_grid_impl, pearl_degree_impl, rational_normal_curve_impl};
use serde_json::Value;

#[test]
fn grid_has_inside_and_outside_cells() {
    let g = coamoeba_grid_impl(60, &[0.0], 1e-9);
    assert_eq!(g.len(), 3600);
    assert!(g.contains(&0) && g.contains(&2));
    // the first cell has all three angles within one step of 0
    assert_eq!(g[0], 0);
}

#[test]
fn grid_is_symmetric_under_swapping_the_free_angles() {
    let r = 41;
    let g = coamoeba_grid_impl(r, &[0.0], 1e-9);
    for i in 0..r {
        for j in 0..r {
            assert_eq!(g[i * r + j], g[j * r + i]);
        }
    }
}

#[test]
fn curve_report() {
    let text = rational_normal_curve_impl(2, "4,-7,1,2", 9).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["samples"].as_array().unwrap().len(), 9);
    assert!(rational_normal_curve_impl(2, "3,-5,1,1", 4).is_err());
    assert!(rational_normal_curve_impl(2, "1,x", 4).is_err());
}

#[test]
fn pearl_degrees() {
    assert_eq!(pearl_degree_impl(2, "1,2", "1;2").unwrap(), "1/1");
    assert_eq!(pearl_degree_impl(2, "", "1;2;3;4").unwrap(), "2/1");
    assert!(pearl_degree_impl(2, "9", "1").is_err());
}
