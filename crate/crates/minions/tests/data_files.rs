//! The JSON documents shipped under `data/` are pinned to the library:
//! if either ever goes stale, these tests fail and name the example that
//! regenerates it.

use serde_json::Value;

#[test]
fn shipped_roster_matches_the_library() {
    let shipped: Value =
        serde_json::from_str(include_str!("../data/roster.json")).expect("valid JSON");
    assert_eq!(
        shipped,
        minions::roster_document(),
        "data/roster.json is stale; regenerate with `cargo run --example dump_roster`"
    );
}

#[test]
fn shipped_clone_order_matches_the_library() {
    let shipped: Value =
        serde_json::from_str(include_str!("../data/clone_order.json")).expect("valid JSON");
    assert_eq!(
        shipped,
        minions::clone_order_document(),
        "data/clone_order.json is stale; regenerate with `cargo run --example dump_clone_order`"
    );
}
