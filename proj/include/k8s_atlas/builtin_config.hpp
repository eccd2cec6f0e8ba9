// Copyright 2026 The k8s-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "k8s_atlas/config.hpp"

namespace k8s_atlas {

/// Reference rules for the standard kinds. Pod rules also apply to the pod
/// template embedded in every workload kind.
inline constexpr std::string_view kBuiltinConfigYaml = R"yaml(
nodes:
  Pod/v1:
    edges:
      spec.volumes.*.configMap.name:
        kind: ConfigMap
        apiVersion: v1
      spec.volumes.*.secret.secretName:
        kind: Secret
        apiVersion: v1
      spec.volumes.*.persistentVolumeClaim.claimName:
        kind: PersistentVolumeClaim
        apiVersion: v1
      spec.volumes.*.projected.sources.*.configMap.name:
        kind: ConfigMap
        apiVersion: v1
      spec.volumes.*.projected.sources.*.secret.name:
        kind: Secret
        apiVersion: v1
      spec.containers.*.envFrom.*.configMapRef.name:
        kind: ConfigMap
        apiVersion: v1
      spec.containers.*.envFrom.*.secretRef.name:
        kind: Secret
        apiVersion: v1
      spec.containers.*.env.*.valueFrom.configMapKeyRef.name:
        kind: ConfigMap
        apiVersion: v1
      spec.containers.*.env.*.valueFrom.secretKeyRef.name:
        kind: Secret
        apiVersion: v1
      spec.initContainers.*.envFrom.*.configMapRef.name:
        kind: ConfigMap
        apiVersion: v1
      spec.initContainers.*.envFrom.*.secretRef.name:
        kind: Secret
        apiVersion: v1
      spec.initContainers.*.env.*.valueFrom.configMapKeyRef.name:
        kind: ConfigMap
        apiVersion: v1
      spec.initContainers.*.env.*.valueFrom.secretKeyRef.name:
        kind: Secret
        apiVersion: v1
      spec.imagePullSecrets.*.name:
        kind: Secret
        apiVersion: v1
      spec.serviceAccountName:
        kind: ServiceAccount
        apiVersion: v1
      spec.priorityClassName:
        kind: PriorityClass
        apiVersion: scheduling.k8s.io/v1
      spec.runtimeClassName:
        kind: RuntimeClass
        apiVersion: node.k8s.io/v1
  StatefulSet/apps/v1:
    edges:
      spec.serviceName:
        kind: Service
        apiVersion: v1
  Ingress/networking.k8s.io/v1:
    edges:
      spec.rules.*.http.paths.*.backend.service.name:
        kind: Service
        apiVersion: v1
      spec.defaultBackend.service.name:
        kind: Service
        apiVersion: v1
      spec.tls.*.secretName:
        kind: Secret
        apiVersion: v1
      spec.ingressClassName:
        kind: IngressClass
        apiVersion: networking.k8s.io/v1
  RoleBinding/rbac.authorization.k8s.io/v1:
    edges:
      roleRef.name:
        kind: Role
        apiVersion: rbac.authorization.k8s.io/v1
        kind_field: kind
      subjects.*.name:
        kind: ServiceAccount
        apiVersion: v1
        kind_field: kind
  ClusterRoleBinding/rbac.authorization.k8s.io/v1:
    edges:
      roleRef.name:
        kind: ClusterRole
        apiVersion: rbac.authorization.k8s.io/v1
        kind_field: kind
      subjects.*.name:
        kind: ServiceAccount
        apiVersion: v1
        kind_field: kind
  PersistentVolumeClaim/v1:
    edges:
      spec.storageClassName:
        kind: StorageClass
        apiVersion: storage.k8s.io/v1
      spec.volumeName:
        kind: PersistentVolume
        apiVersion: v1
  PersistentVolume/v1:
    edges:
      spec.storageClassName:
        kind: StorageClass
        apiVersion: storage.k8s.io/v1
  HorizontalPodAutoscaler/autoscaling/v2:
    edges:
      spec.scaleTargetRef.name:
        kind: Deployment
        apiVersion: apps/v1
        kind_field: kind
  VerticalPodAutoscaler/autoscaling.k8s.io/v1:
    edges:
      spec.targetRef.name:
        kind: Deployment
        apiVersion: apps/v1
        kind_field: kind
  ServiceAccount/v1:
    edges:
      secrets.*.name:
        kind: Secret
        apiVersion: v1
      imagePullSecrets.*.name:
        kind: Secret
        apiVersion: v1
  VolumeAttachment/storage.k8s.io/v1:
    edges:
      spec.source.persistentVolumeName:
        kind: PersistentVolume
        apiVersion: v1
      spec.nodeName:
        kind: Node
        apiVersion: v1
  CSIStorageCapacity/storage.k8s.io/v1:
    edges:
      storageClassName:
        kind: StorageClass
        apiVersion: storage.k8s.io/v1
  CSINode/storage.k8s.io/v1:
    edges:
      spec.drivers.*.name:
        kind: CSIDriver
        apiVersion: storage.k8s.io/v1
)yaml";

/// The parsed built-in configuration, built once.
inline const VisualConfig& builtin_config() {
  static const VisualConfig config = parse_config(std::string(kBuiltinConfigYaml));
  return config;
}

}  // namespace k8s_atlas
