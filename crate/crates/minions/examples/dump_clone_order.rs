//! Regenerates `data/clone_order.json`.
//!
//! ```sh
//! cargo run --example dump_clone_order > crates/minions/data/clone_order.json
//! ```

fn main() {
    let doc = minions::clone_order_document();
    println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes"));
}
