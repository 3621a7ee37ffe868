import init, { preset_names, preset_json, partitions, radical, depth } from "./pkg/radfilt_web.js";

const $ = (id) => document.getElementById(id);

function show(f) {
  $("out").textContent = "running...";
  // let the message paint before the synchronous call
  setTimeout(() => {
    const t0 = performance.now();
    const text = f($("algebra").value, Number($("maxdim").value));
    $("out").textContent = text + `\n(${(performance.now() - t0).toFixed(0)} ms)`;
  }, 0);
}

await init();

for (const name of preset_names().split(",")) {
  $("preset").add(new Option(name, name));
}
$("preset").value = "A3";
$("algebra").value = preset_json("A3");
$("preset").onchange = () => { $("algebra").value = preset_json($("preset").value); };

$("run-partitions").onclick = () => {
  const kind = document.querySelector("input[name=kind]:checked").value;
  show((a, d) => partitions(a, kind, d));
};
$("run-radical").onclick = () => {
  show((a, d) => radical(a, $("rad-m").value.trim(), $("rad-n").value.trim(), Number($("rad-power").value), d));
};
$("run-depth").onclick = () => show((a, d) => depth(a, $("morphism").value.trim(), d));
