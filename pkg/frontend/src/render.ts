/** three.js rendering of a Frame: flat-shaded terrain per chapter, a
 * capsule-and-box placeholder corgi, partner dogs, rock bands, the moon.
 * Fidelity target is cue correctness, not visuals. */

import * as THREE from "three";

import type { Frame } from "./player.js";
import { activeRockCells, chapterIndexAt } from "./player.js";
import { cameraPoseFor } from "./poses.js";
import type { SceneScript, TerrainEntry } from "./types.js";

function terrainMesh(entry: TerrainEntry): THREE.Mesh {
  const n = entry.size;
  const span = (n - 1) * entry.cell_m;
  const geometry = new THREE.PlaneGeometry(span, span, n - 1, n - 1);
  const positions = geometry.attributes.position as THREE.BufferAttribute;
  for (let row = 0; row < n; row++) {
    for (let col = 0; col < n; col++) {
      const i = row * n + col;
      positions.setXYZ(i, col * entry.cell_m, row * entry.cell_m, entry.heights[i]);
    }
  }
  positions.needsUpdate = true;
  geometry.computeVertexNormals();
  const material = new THREE.MeshLambertMaterial({ color: 0x5a7a4d, flatShading: true });
  return new THREE.Mesh(geometry, material);
}

function dogMesh(scale: number, color: number): THREE.Group {
  const group = new THREE.Group();
  const fur = new THREE.MeshLambertMaterial({ color });
  const body = new THREE.Mesh(new THREE.CapsuleGeometry(0.18, 0.42, 4, 8), fur);
  body.rotation.z = Math.PI / 2;
  body.position.z = 0.3;
  const head = new THREE.Mesh(new THREE.BoxGeometry(0.26, 0.24, 0.22), fur);
  head.position.set(0.38, 0, 0.5);
  const earGeo = new THREE.ConeGeometry(0.06, 0.14, 4);
  for (const side of [-1, 1]) {
    const ear = new THREE.Mesh(earGeo, fur);
    ear.position.set(0.38, side * 0.09, 0.66);
    group.add(ear);
  }
  group.add(body, head);
  group.scale.setScalar(scale);
  return group;
}

export class SceneRenderer {
  private renderer: THREE.WebGLRenderer;
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private sun = new THREE.DirectionalLight(0xffffff, 2.2);
  private ambient = new THREE.AmbientLight(0xffffff, 0.9);
  private terrains: THREE.Mesh[] = [];
  private agent = dogMesh(1.0, 0xd9913e);
  private partners = new Map<number, THREE.Group>();
  private rocks: THREE.InstancedMesh | null = null;
  private moon: THREE.Mesh;
  private script: SceneScript | null = null;

  constructor(canvas: HTMLCanvasElement) {
    this.renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
    this.camera = new THREE.PerspectiveCamera(50, 16 / 9, 0.1, 600);
    this.camera.up.set(0, 0, 1);
    this.sun.position.set(60, 40, 120);
    this.scene.add(this.sun, this.ambient, this.agent);
    this.moon = new THREE.Mesh(
      new THREE.SphereGeometry(6, 24, 16),
      new THREE.MeshBasicMaterial({ color: 0xf5f1d8 }),
    );
    this.scene.add(this.moon);
  }

  load(script: SceneScript): void {
    this.script = script;
    for (const mesh of this.terrains) this.scene.remove(mesh);
    this.terrains = script.terrain.map((entry) => {
      const mesh = terrainMesh(entry);
      mesh.visible = false;
      this.scene.add(mesh);
      return mesh;
    });
    for (const partner of this.partners.values()) this.scene.remove(partner);
    this.partners.clear();
    script.tracks.spawns.forEach((spawn, i) => {
      if (spawn.kind !== "partner_dog") return;
      const partner = dogMesh(spawn.scale, 0x8a8f98);
      partner.position.set(spawn.x, spawn.y, spawn.z);
      partner.visible = false;
      this.partners.set(i, partner);
      this.scene.add(partner);
    });
    if (this.rocks) this.scene.remove(this.rocks);
    this.rocks = new THREE.InstancedMesh(
      new THREE.BoxGeometry(1.4, 1.4, 1.0),
      new THREE.MeshLambertMaterial({ color: 0x64584c }),
      4096,
    );
    this.rocks.count = 0;
    this.scene.add(this.rocks);
    const gate = { x: 56 * 2, y: 56 * 2 };
    const d = script.outcome.moon_distance_m;
    this.moon.position.set(gate.x + d * 0.7, gate.y + d * 0.7, 10 + d * 0.45);
  }

  resize(width: number, height: number): void {
    this.renderer.setSize(width, height, false);
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
  }

  draw(frame: Frame): void {
    const script = this.script;
    if (!script) return;

    this.terrains.forEach((mesh, i) => {
      mesh.visible = i === frame.chapterIndex;
    });

    const sky = new THREE.Color(frame.lighting.sky[0], frame.lighting.sky[1], frame.lighting.sky[2]);
    this.scene.background = sky;
    const span = 64 * 2;
    const fogNear = span * (1.0 - frame.lighting.fog * 0.9);
    this.scene.fog = new THREE.Fog(sky, Math.max(6, fogNear * 0.3), Math.max(20, span * (1.3 - frame.lighting.fog)));
    const warmth = (6500 - frame.lighting.temperature) / 6500;
    this.sun.color.setRGB(1.0, 1.0 - Math.max(0, warmth) * 0.25, 1.0 - warmth * 0.45);

    this.agent.position.set(frame.agent.x, frame.agent.y, frame.agent.z);
    this.agent.rotation.z = Math.atan2(frame.agent.headingY, frame.agent.headingX);
    const bob = frame.agent.speed > 0 ? Math.sin(frame.t * 8) * 0.04 * frame.agent.speed : 0;
    this.agent.position.z += bob;
    if (frame.agent.clip === "fall_asleep") this.agent.rotation.x = Math.PI / 2.4;
    else if (frame.agent.clip === "cower_scared") this.agent.rotation.x = -0.35;
    else this.agent.rotation.x = 0;

    script.tracks.spawns.forEach((spawn, i) => {
      const partner = this.partners.get(i);
      if (!partner || spawn.kind !== "partner_dog") return;
      const chapterEnd = script.chapters[chapterIndexAt(script, spawn.t0)].t1;
      partner.visible = spawn.t0 <= frame.t && frame.t < chapterEnd;
    });

    if (this.rocks) {
      const cells = activeRockCells(script, frame.t);
      const terrain = script.terrain[frame.chapterIndex];
      const m = new THREE.Matrix4();
      cells.forEach(([col, row], i) => {
        const z = terrain.heights[row * terrain.size + col];
        m.setPosition(col * terrain.cell_m, row * terrain.cell_m, z + 0.5);
        this.rocks!.setMatrixAt(i, m);
      });
      this.rocks.count = cells.length;
      this.rocks.instanceMatrix.needsUpdate = true;
    }

    const pose = cameraPoseFor(frame.camera.shot, frame.agent, frame.t, script.outcome.moon_distance_m);
    this.camera.position.set(...pose.position);
    this.camera.fov = pose.fovDeg;
    this.camera.lookAt(...pose.lookAt);
    if (pose.rollDeg !== 0) this.camera.rotateZ((pose.rollDeg * Math.PI) / 180);
    this.camera.updateProjectionMatrix();

    this.renderer.render(this.scene, this.camera);
  }
}
